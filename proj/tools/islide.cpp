#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "islide/islide.hpp"

using namespace islide;

namespace {

enum class Format { automatic, graph6, edges, dot };

const std::map<std::string, Format> kFormats{
    {"auto", Format::automatic}, {"graph6", Format::graph6}, {"edges", Format::edges}, {"dot", Format::dot}};

std::string slurp(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(source, std::ios::binary);
  if (!in) throw ArgumentError("cannot read " + source);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool is_file(const std::string& arg) {
  if (arg == "-") return true;
  std::ifstream in(arg);
  return static_cast<bool>(in);
}

Format detect(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::getline(in, token);
      continue;
    }
    if (token == "graph" || token == "strict") return Format::dot;
    if (std::isdigit(static_cast<unsigned char>(token[0]))) return Format::edges;
    return Format::graph6;
  }
  throw FormatError("input is empty");
}

long long to_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ArgumentError("not an integer: " + s);
  return v;
}

std::vector<Vertex> to_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(static_cast<Vertex>(to_int(item)));
  return out;
}

// "theta:2,2,3", "house:" etc. ':' never occurs in graph6.
std::optional<Graph> named_family(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::vector<int> params;
  for (Vertex p : to_list(arg.substr(colon + 1))) params.push_back(p);
  return build_family(parse_family(arg.substr(0, colon), params));
}

// An inline graph6 string or family name, or a file ('-' for stdin) holding
// graph6 lines, an edge list or a DOT graph.
std::vector<Graph> read_graphs(const std::string& arg, Format format = Format::automatic) {
  if (!is_file(arg)) {
    if (auto g = named_family(arg)) return {*g};
    if (format != Format::automatic && format != Format::graph6)
      throw ArgumentError("no such file: " + arg);
    return {parse_graph6(arg)};
  }
  const std::string text = slurp(arg);
  if (format == Format::automatic) format = detect(text);
  if (format == Format::dot) return {parse_dot(text)};
  if (format == Format::edges) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  if (out.empty()) throw FormatError(arg + " holds no graphs");
  return out;
}

Graph read_graph(const std::string& arg) {
  auto gs = read_graphs(arg);
  if (gs.size() != 1) throw ArgumentError(arg + " holds more than one graph");
  return gs.front();
}

SeedRecipe read_recipe(const std::string& arg) { return recipe_from_json(parse_json(slurp(arg))); }

struct Output {
  bool pretty = false;
  void operator()(const Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

using Builder = std::function<SeedRecipe(const std::vector<std::string>&)>;

struct Construction {
  std::string usage;
  std::size_t arity;
  Builder build;
};

std::map<std::string, Construction> constructions() {
  auto v = [](const std::string& s) { return static_cast<Vertex>(to_int(s)); };
  auto n = [](const std::string& s) { return static_cast<int>(to_int(s)); };
  std::map<std::string, Construction> c;
  c["complete"] = {"N", 1, [=](auto& a) { return seed_basic(Complete{n(a[0])}); }};
  c["hypercube"] = {"N", 1, [=](auto& a) { return seed_basic(Hypercube{n(a[0])}); }};
  c["cycle"] = {"K", 1, [=](auto& a) { return seed_basic(Cycle{n(a[0])}); }};
  c["house"] = {"", 0, [](auto&) { return seed_basic(House{}); }};
  c["forest"] = {"GRAPH", 1, [](auto& a) { return seed_forest(read_graph(a[0])); }};
  c["blockgraph"] = {"GRAPH", 1, [](auto& a) { return seed_block_graph(read_graph(a[0])); }};
  c["unicyclic"] = {"GRAPH", 1, [](auto& a) { return seed_unicyclic(read_graph(a[0])); }};
  c["cactus"] = {"GRAPH", 1, [](auto& a) { return seed_cactus(read_graph(a[0])); }};
  c["blocks"] = {"GRAPH", 1, [](auto& a) { return seed_by_blocks(read_graph(a[0])); }};
  c["union"] = {"R1 R2", 2,
                [](auto& a) { return seed_union(read_recipe(a[0]), read_recipe(a[1])); }};
  c["cartesian"] = {"R1 R2", 2,
                    [](auto& a) { return seed_cartesian(read_recipe(a[0]), read_recipe(a[1])); }};
  c["inflate"] = {"R K", 2, [](auto& a) {
                    const auto k = to_int(a[1]);
                    if (k < 0) throw ArgumentError("inflate: k must be non-negative");
                    return inflate(read_recipe(a[0]), static_cast<std::size_t>(k));
                  }};
  c["k13"] = {"R SEED_VERTEX", 2, [=](auto& a) { return attach_k13(read_recipe(a[0]), v(a[1])); }};
  c["epn"] = {"R", 1, [](auto& a) { return epn_normalize(read_recipe(a[0])); }};
  c["isolated"] = {"R", 1, [](auto& a) { return add_isolated_to_target(read_recipe(a[0])); }};
  c["pendant"] = {"R W", 2,
                  [=](auto& a) { return add_pendant_to_target(read_recipe(a[0]), v(a[1])); }};
  c["clique"] = {"R V1,V2,...", 2, [](auto& a) {
                   auto r = read_recipe(a[0]);
                   auto members = to_list(a[1]);
                   for (Vertex t : members)
                     if (!r.target.valid(t)) throw ArgumentError("clique vertex out of range");
                   const VertexSet clique(r.target.order(), members);
                   return max_clique_replace(std::move(r), clique);
                 }};
  c["delete"] = {"R X", 2,
                 [=](auto& a) { return delete_vertex_from_target(read_recipe(a[0]), v(a[1])); }};
  c["identify"] = {"R1 X R2 Y", 4, [=](auto& a) {
                     return identify_vertices_target(read_recipe(a[0]), v(a[1]), read_recipe(a[2]),
                                                     v(a[3]));
                   }};
  c["bridge"] = {"R1 X R2 Y", 4, [=](auto& a) {
                   return bridge_targets(read_recipe(a[0]), v(a[1]), read_recipe(a[2]), v(a[3]));
                 }};
  c["cliquebridge"] = {"R1 X R2 Y M", 5, [=](auto& a) {
                         return clique_bridge_targets(read_recipe(a[0]), v(a[1]),
                                                      read_recipe(a[2]), v(a[3]), n(a[4]));
                       }};
  c["deletebridge"] = {"R U V", 3, [=](auto& a) {
                         return delete_bridge_from_target(read_recipe(a[0]), v(a[1]), v(a[2]));
                       }};
  return c;
}

std::string construction_help() {
  std::string out = "Kinds (R = recipe JSON file, GRAPH = graph6 or file):\n";
  for (const auto& [name, c] : constructions()) out += "  " + name + " " + c.usage + "\n";
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("ISLIDE_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw ArgumentError(std::string("ISLIDE_JOBS is not an integer: ") + env);
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"i-graphs of small graphs: compute, construct seeds, search"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--pretty", out.pretty, "Indent JSON output");

  std::string source;
  bool dot = false, jump = false;
  auto* igraph = app.add_subcommand("igraph", "Print the i-graph of each input graph as JSON");
  igraph->add_option("graph", source, "graph6 string, file, or - for stdin")->required();
  igraph->add_flag("--dot", dot, "Emit DOT with i-set labels instead of JSON");
  igraph->add_flag("--jump", jump, "Use the token-jump model");

  std::vector<std::string> construct_args;
  auto* construct = app.add_subcommand("construct", "Build and certify a seed recipe");
  construct->add_option("args", construct_args, "Construction kind and its arguments")
      ->required();
  construct->footer(construction_help());

  auto* verify_cmd = app.add_subcommand("verify", "Re-certify a recipe JSON file from scratch");
  verify_cmd->add_option("recipe", source, "Recipe JSON file, or - for stdin")->required();

  int max_n = kMaxSearchOrder;
  int jobs = 0;
  bool check_pruning = false;
  auto* search = app.add_subcommand("search", "Search all small graphs for a seed of a target");
  search->add_option("graph", source, "Target graph")->required();
  search->add_option("--max-n", max_n, "Largest seed order")->check(CLI::Range(1, kMaxSearchOrder));
  search->add_option("--jobs", jobs, "Worker threads (default: $ISLIDE_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  search->add_flag("--check-pruning", check_pruning, "Also test the candidates pruning skips");

  auto* check = app.add_subcommand("check", "Look for an induced diamond, K2,3 or theta(2,2,3)");
  check->add_option("graph", source, "graph6 string, file, or - for stdin")->required();

  std::string from = "auto", to = "graph6";
  auto* exporter = app.add_subcommand("export", "Convert between graph6, edge list and DOT");
  exporter->add_option("graph", source, "graph6 string, file, or - for stdin")->required();
  exporter->add_option("--from", from, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edges", "dot"}));
  exporter->add_option("--to", to, "Output format")->check(CLI::IsMember({"graph6", "edges", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*igraph) {
      for (const auto& g : read_graphs(source)) {
        const auto ig = jump ? build_jump_graph(g) : build_igraph(g);
        if (dot)
          std::cout << emit_dot(ig);
        else
          out(to_json(ig));
      }
    } else if (*construct) {
      const auto table = constructions();
      const auto it = table.find(construct_args[0]);
      if (it == table.end()) throw ArgumentError("unknown construction: " + construct_args[0]);
      const std::vector<std::string> args(construct_args.begin() + 1, construct_args.end());
      if (args.size() != it->second.arity)
        throw ArgumentError("usage: construct " + it->first + " " + it->second.usage);
      out(to_json(it->second.build(args)));
    } else if (*verify_cmd) {
      auto r = read_recipe(source);
      if (!verify(r)) {
        std::cout << "FAILED: certificate is not an isomorphism from ig(seed) onto the target\n";
        return 1;
      }
      std::cout << "ok: ig(" << emit_graph6(r.seed) << ") = " << emit_graph6(r.target) << '\n';
    } else if (*search) {
      SearchOptions options;
      options.jobs = jobs > 0 ? jobs : default_jobs();
      options.verify_pruning = options.verify_pruning || check_pruning;
      out(to_json(search_seed(read_graph(source), max_n, options)));
    } else if (*check) {
      for (const auto& g : read_graphs(source)) {
        Json j = {{"graph", emit_graph6(g)}};
        if (auto hit = find_obstruction(g))
          j["obstruction"] = {{"pattern", hit->pattern}, {"vertices", hit->vertices.members()}};
        else
          j["obstruction"] = nullptr;
        out(j);
      }
    } else if (*exporter) {
      for (const auto& g : read_graphs(source, kFormats.at(from))) {
        if (to == "graph6")
          std::cout << emit_graph6(g) << '\n';
        else if (to == "edges")
          std::cout << emit_edge_list(g);
        else
          std::cout << emit_dot(g);
      }
    }
  } catch (const CertificationError& e) {
    std::cerr << "islide: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "islide: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
