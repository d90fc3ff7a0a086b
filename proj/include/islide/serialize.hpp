#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "islide/errors.hpp"
#include "islide/graph.hpp"
#include "islide/graph6.hpp"
#include "islide/igraph.hpp"
#include "islide/recipe.hpp"
#include "islide/search.hpp"

namespace islide {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json set_json(const VertexSet& s) { return s.members(); }

template <class T>
T json_get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

inline std::vector<Vertex> certificate_from(const Json& j) {
  if (j.is_null()) return {};
  try {
    return j.get<std::vector<Vertex>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("certificate: ") + e.what());
  }
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
}

// ---- IGraph ----------------------------------------------------------------

inline Json to_json(const IGraph& ig) {
  Json isets = Json::array();
  for (const auto& s : ig.catalog.isets) isets.push_back(detail::set_json(s));
  Json edges = Json::array();
  for (const auto& [a, b] : ig.skeleton.edges()) {
    const auto s = ig.slide(a, b);
    edges.push_back({{"a", a}, {"b", b}, {"slide", {s.from, s.to}}});
  }
  return {{"seed", emit_graph6(ig.base)},
          {"i", ig.catalog.i_number},
          {"isets", isets},
          {"edges", edges}};
}

// Rebuilds the i-graph of the stored seed and checks that the document
// describes it exactly.
inline IGraph igraph_from_json(const Json& j) {
  const Graph seed = parse_graph6(detail::json_get<std::string>(j, "seed"));
  if (seed.order() == 0) throw FormatError("i-graph seed has no vertices");
  IGraph ig = build_igraph(seed);
  if (to_json(ig) != j) throw FormatError("i-graph document does not match its seed");
  return ig;
}

// ---- SeedRecipe ------------------------------------------------------------

inline Json to_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

inline Json to_json(const SeedRecipe& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json params = Json::object();
    for (const auto& [k, v] : s.params) params[k] = to_json(v);
    Json added = Json::array();
    for (const auto& g : s.added) added.push_back({{"role", g.role}, {"vertices", g.vertices}});
    steps.push_back({{"lemma", s.result}, {"params", params}, {"added", added}});
  }
  return {{"seed", emit_graph6(r.seed)},
          {"target", emit_graph6(r.target)},
          {"steps", steps},
          {"certificate", r.certificate ? Json(*r.certificate) : Json(nullptr)}};
}

namespace detail {

inline SeedRecipe recipe_fields(const Json& j) {
  SeedRecipe r;
  r.seed = parse_graph6(detail::json_get<std::string>(j, "seed"));
  r.target = parse_graph6(detail::json_get<std::string>(j, "target"));
  const auto steps = detail::json_get<Json>(j, "steps");
  for (const auto& s : steps) {
    Step step;
    step.result = detail::json_get<std::string>(s, "lemma");
    const auto params = detail::json_get<Json>(s, "params");
    for (const auto& [k, v] : params.items()) {
      if (v.is_number_integer())
        step.params.emplace_back(k, v.get<long long>());
      else if (v.is_string())
        step.params.emplace_back(k, v.get<std::string>());
      else if (v.is_array())
        step.params.emplace_back(k, v.get<std::vector<Vertex>>());
      else
        throw FormatError("step parameter \"" + k + "\" has an unsupported type");
    }
    const auto added = detail::json_get<Json>(s, "added");
    for (const auto& g : added)
      step.added.push_back({detail::json_get<std::string>(g, "role"),
                            detail::json_get<std::vector<Vertex>>(g, "vertices")});
    r.steps.push_back(std::move(step));
  }
  const Json cert = detail::json_get<Json>(j, "certificate");
  if (!cert.is_null()) r.certificate = detail::certificate_from(cert);
  return r;
}

}  // namespace detail

// Reads a recipe without checking its certificate; see verify().
inline SeedRecipe recipe_from_json(const Json& j) {
  try {
    return detail::recipe_fields(j);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("recipe: ") + e.what());
  }
}

// ---- SearchOutcome ---------------------------------------------------------

inline Json to_json(const SearchOutcome& o) {
  Json out = {{"target", emit_graph6(o.target)}};
  if (auto f = std::get_if<SearchFound>(&o.result)) {
    out["result"] = "found";
    out["seed"] = emit_graph6(f->seed);
    out["seed_order"] = f->order;
    out["index"] = f->index;
    out["certificate"] = f->certificate;
  } else {
    const auto& e = std::get<SearchExhausted>(o.result);
    out["result"] = "exhausted";
    out["max_n"] = e.max_n;
    Json counts = Json::array();
    for (const auto& c : e.counts)
      counts.push_back(
          {{"n", c.n}, {"graphs", c.graphs}, {"pruned", c.pruned}, {"examined", c.examined}});
    out["counts"] = counts;
  }
  return out;
}

inline SearchOutcome outcome_from_json(const Json& j) {
  SearchOutcome o;
  o.target = parse_graph6(detail::json_get<std::string>(j, "target"));
  const auto kind = detail::json_get<std::string>(j, "result");
  if (kind == "found") {
    SearchFound f;
    f.seed = parse_graph6(detail::json_get<std::string>(j, "seed"));
    f.order = detail::json_get<int>(j, "seed_order");
    f.index = detail::json_get<std::size_t>(j, "index");
    f.certificate = detail::certificate_from(detail::json_get<Json>(j, "certificate"));
    o.result = std::move(f);
  } else if (kind == "exhausted") {
    SearchExhausted e;
    e.max_n = detail::json_get<int>(j, "max_n");
    const auto counts = detail::json_get<Json>(j, "counts");
    for (const auto& c : counts)
      e.counts.push_back({detail::json_get<int>(c, "n"), detail::json_get<std::size_t>(c, "graphs"),
                          detail::json_get<std::size_t>(c, "pruned"),
                          detail::json_get<std::size_t>(c, "examined")});
    o.result = std::move(e);
  } else {
    throw FormatError("unknown search result \"" + kind + "\"");
  }
  return o;
}

// ---- DOT -------------------------------------------------------------------

inline std::string set_label(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  });
  return out + "}";
}

inline std::string emit_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Skeleton with i-set node labels and token moves as edge labels.
inline std::string emit_dot(const IGraph& ig) {
  std::ostringstream out;
  out << "graph ig {\n";
  for (int j = 0; j < static_cast<int>(ig.catalog.isets.size()); ++j)
    out << "  " << j << " [label=\"" << set_label(ig.iset(j)) << "\"];\n";
  for (const auto& [a, b] : ig.skeleton.edges()) {
    const auto s = ig.slide(a, b);
    out << "  " << a << " -- " << b << " [label=\"" << s.from << "-" << s.to << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// Reads an undirected DOT graph whose node ids are non-negative integers.
// Attribute lists are skipped; the vertex count is one more than the largest
// id mentioned.
inline Graph parse_dot(const std::string& text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (text.compare(pos, 2, "//") == 0 || (pos < text.size() && text[pos] == '#')) {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (text.compare(pos, 2, "/*") == 0) {
        auto end = text.find("*/", pos + 2);
        if (end == std::string::npos) throw FormatError("DOT: unterminated comment");
        pos = end + 2;
      } else {
        return;
      }
    }
  };
  auto word = [&] {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c)
      throw FormatError(std::string("DOT: expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  };
  auto skip_attributes = [&] {
    skip_space();
    while (pos < text.size() && text[pos] == '[') {
      bool quoted = false;
      for (++pos; pos < text.size(); ++pos) {
        if (text[pos] == '"' && text[pos - 1] != '\\') quoted = !quoted;
        if (!quoted && text[pos] == ']') break;
      }
      if (pos >= text.size()) throw FormatError("DOT: unterminated attribute list");
      ++pos;
      skip_space();
    }
  };

  std::string head = word();
  if (head == "strict") head = word();
  if (head != "graph") throw FormatError("DOT: only undirected 'graph' is supported");
  skip_space();
  if (pos < text.size() && text[pos] != '{') word();
  expect('{');

  std::vector<Edge> edges;
  Vertex max_id = -1;
  auto node = [&](const std::string& w) {
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw FormatError("DOT: node id \"" + w + "\" is not a non-negative integer");
    const Vertex v = std::stoi(w);
    max_id = std::max(max_id, v);
    return v;
  };
  for (;;) {
    skip_space();
    if (pos >= text.size()) throw FormatError("DOT: missing '}'");
    if (text[pos] == '}') break;
    if (text[pos] == ';') {
      ++pos;
      continue;
    }
    const std::string first = word();
    if (first == "graph" || first == "node" || first == "edge") {
      skip_attributes();
      continue;
    }
    Vertex prev = node(first);
    skip_space();
    while (text.compare(pos, 2, "--") == 0) {
      pos += 2;
      const Vertex next = node(word());
      edges.emplace_back(prev, next);
      prev = next;
      skip_space();
    }
    if (text.compare(pos, 2, "->") == 0) throw FormatError("DOT: directed edges are not supported");
    skip_attributes();
  }
  Graph g(static_cast<std::size_t>(max_id + 1));
  for (const auto& [u, v] : edges) {
    if (u == v) throw FormatError("DOT: self-loop at " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

// ---- Edge list ---------------------------------------------------------------
// First line: vertex count. Then one "u v" pair per line. '#' starts a comment.

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Graph> g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::vector<long long> nums;
    long long x;
    while (fields >> x) nums.push_back(x);
    std::string rest;
    fields.clear();
    if (fields >> rest) throw FormatError("edge list line " + std::to_string(lineno) + ": bad token");
    if (nums.empty()) continue;
    if (!g) {
      if (nums.size() != 1 || nums[0] < 0)
        throw FormatError("edge list must start with the vertex count");
      g = Graph(static_cast<std::size_t>(nums[0]));
      continue;
    }
    if (nums.size() != 2 || !g->valid(static_cast<Vertex>(nums[0])) ||
        !g->valid(static_cast<Vertex>(nums[1])) || nums[0] == nums[1])
      throw FormatError("edge list line " + std::to_string(lineno) + ": bad edge");
    g->add_edge(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!g) throw FormatError("edge list is empty");
  return *g;
}

}  // namespace islide
