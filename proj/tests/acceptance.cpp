// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "islide/islide.hpp"

using namespace islide;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void fail(const std::string& why) {
    if (v_.ok) v_.detail = why;
    v_.ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void note(const std::string& info) {
    if (v_.ok) v_.detail = info;
  }
  Verdict verdict() const { return v_; }

 private:
  Verdict v_;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s,
               const std::function<void(Checker&)>& body) {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    std::ostringstream why;
    why << "took " << dt << " s, budget " << budget_s << " s";
    c.fail(why.str());
  }
  const auto v = c.verdict();
  if (!v.ok) ++failures;
  std::printf("%s %2d  %s  [%.3f s]%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), dt,
              v.detail.empty() ? "" : "  ", v.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::vector<Vertex>> members(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

bool sound(const SeedRecipe& r) { return r.certified() && verify(r) && !r.steps.empty(); }

// Labels of `after` on the first seed.order() vertices of `before` agree.
bool same_labels(const SeedRecipe& before, const SeedRecipe& after) {
  if (!(before.target == after.target)) return false;
  for (Vertex t = 0; t < static_cast<Vertex>(before.target.order()); ++t)
    if (!(after.label(t).resized(before.seed.order()) == before.label(t))) return false;
  return true;
}

const std::vector<std::vector<Graph>>& corpus7() {
  static const auto corpus = generate_corpus(7);
  return corpus;
}

// Random certified recipe drawn from the basic families, forests and unions.
SeedRecipe random_recipe(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_tree = [&](int n) {
    Graph t(n);
    for (Vertex v = 1; v < n; ++v) t.add_edge(v, pick(0, v - 1));
    return t;
  };
  switch (pick(0, 6)) {
    case 0: return seed_basic(Complete{pick(1, 5)});
    case 1: return seed_basic(Cycle{pick(3, 9)});
    case 2: return seed_basic(House{});
    case 3: return seed_basic(Hypercube{pick(1, 3)});
    case 4: return seed_forest(random_tree(pick(1, 5)));
    case 5: return seed_union(seed_basic(Complete{pick(1, 3)}), seed_basic(Cycle{pick(3, 5)}));
    default: return seed_block_graph(random_tree(pick(2, 5)));
  }
}

}  // namespace

int main() {
  criterion(1, "ig(K_n) = K_n for n = 1..8", 1.0, [](Checker& c) {
    for (int n = 1; n <= 8; ++n) {
      const auto kn = family::complete(n);
      c.expect(isomorphic(build_igraph(kn).skeleton, kn), "ig(K" + std::to_string(n) + ")");
      const auto r = seed_basic(Complete{n});
      c.expect(sound(r) && r.seed == kn && r.target == kn, "recipe K" + std::to_string(n));
    }
  });

  criterion(2, "ig(nK2) = Q_n for n = 1..5", 5.0, [](Checker& c) {
    for (int n = 1; n <= 5; ++n) {
      const auto sk = build_igraph(family::matching(n)).skeleton;
      c.expect(isomorphic(sk, family::hypercube(n)), "ig(" + std::to_string(n) + "K2)");
      if (n == 5) c.expect(sk.order() == 32 && sk.size() == 80, "Q5 has 32 vertices, 80 edges");
      const auto r = seed_basic(Hypercube{n});
      c.expect(sound(r) && r.seed == family::matching(n), "hypercube recipe");
    }
  });

  criterion(3, "cycle recipes certify for k = 3..12", 10.0, [](Checker& c) {
    for (int k = 3; k <= 12; ++k) {
      const auto r = seed_basic(Cycle{k});
      c.expect(sound(r) && r.target == family::cycle(k), "C" + std::to_string(k));
      if (k >= 7) {
        const auto cat = enumerate_isets(r.seed);
        c.expect(cat.i_number == 3 && cat.isets.size() == static_cast<std::size_t>(k),
                 "circulant seed for C" + std::to_string(k) + " has i = 3 and k i-sets");
        for (Vertex i = 0; i < k; ++i)
          c.expect(cat.index_of(VertexSet(k, {i, (i + 1) % k, (i + 2) % k})) >= 0,
                   "S_i present");
      }
    }
  });

  criterion(4, "ig(C5) i-sets and 5-cycle, label-exact", 1.0, [](Checker& c) {
    // x1..x5 are vertices 0..4.
    const auto ig = build_igraph(family::cycle(5));
    const std::vector<std::vector<Vertex>> expected{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    c.expect(ig.i_number() == 2, "i(C5) = 2");
    c.expect(members(ig.catalog.isets) == expected, "i-sets");
    const std::vector<Edge> cycle{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
    c.expect(ig.skeleton.edges() == cycle, "skeleton edges");
  });

  criterion(5, "house recipe i-sets and adjacencies, label-exact", 1.0, [](Checker& c) {
    // a..e = 0..4.
    const auto r = seed_basic(House{});
    c.expect(sound(r), "certified");
    c.expect(r.seed == Graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), "seed is K3 with a P3 tail");
    const auto ig = build_igraph(r.seed);
    const std::vector<std::vector<Vertex>> expected{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}};
    c.expect(members(ig.catalog.isets) == expected, "i-sets {a,c},{a,d},{a,e},{b,d},{b,e}");
    // Roof {a,c} over {a,d} - {a,e}; square {a,d} - {a,e} - {b,e} - {b,d}.
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
    c.expect(ig.skeleton.edges() == edges, "skeleton edges");
    c.expect(isomorphic(ig.skeleton, family::house()), "skeleton is the house");
  });

  criterion(6, "no seed on <= 7 vertices for diamond, K2,3, kappa", 600.0, [](Checker& c) {
    std::size_t graphs = 0;
    for (const auto& level : corpus7()) graphs += level.size();
    c.expect(graphs == 1252, "corpus has " + std::to_string(graphs) + " graphs, expected 1252");
    for (const auto& [name, target] :
         {std::pair{"diamond", family::theta(1, 2, 2)}, std::pair{"K2,3", family::theta(2, 2, 2)},
          std::pair{"kappa", family::theta(2, 2, 3)}}) {
      const auto o = search_seed(target, corpus7(), {1, true});
      c.expect(!o.found(), std::string("seed found for ") + name);
      if (o.found()) continue;
      std::size_t seen = 0;
      for (const auto& k : std::get<SearchExhausted>(o.result).counts) seen += k.pruned + k.examined;
      c.expect(seen == 1252, std::string("not every candidate examined for ") + name);
    }
    c.note("1252 graphs examined per target");
  });

  criterion(7, "all 10 non-diamond 4-vertex graphs have certified recipes", 60.0, [](Checker& c) {
    const auto diamond = family::theta(1, 2, 2);
    int realised = 0;
    for (const auto& g : generate_nonisomorphic(4)) {
      if (isomorphic(g, diamond)) continue;
      const auto r = is_forest(g) ? seed_forest(g) : seed_by_blocks(g);
      c.expect(sound(r) && r.target == g, "recipe for " + emit_graph6(g));
      ++realised;
    }
    c.expect(realised == 10, std::to_string(realised) + " non-diamond graphs");
    c.expect(!search_seed(diamond, corpus7()).found(), "diamond has a seed on <= 7 vertices");
  });

  criterion(8, "jump graph equals slide graph on every graph with <= 6 vertices", 60.0,
            [](Checker& c) {
              std::size_t count = 0;
              for (int n = 1; n <= 6; ++n)
                for (const auto& g : corpus7()[n - 1]) {
                  ++count;
                  const auto slide = build_igraph(g), jump = build_jump_graph(g);
                  c.expect(slide.skeleton == jump.skeleton, "differs on " + emit_graph6(g));
                }
              c.expect(count == 208, "expected 208 graphs");
              c.note(std::to_string(count) + " graphs");
            });

  criterion(9, "i-graph invariants on every graph with <= 6 vertices", 60.0, [](Checker& c) {
    std::size_t claw = 0, dist = 0, star = 0, c4 = 0;
    std::size_t paths = 0, pairs = 0, stars = 0, squares = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& g : corpus7()[n - 1]) {
        const auto ig = build_igraph(g);
        claw += invariants::claw_violations(ig, &paths);
        dist += invariants::distance_violations(ig, &pairs);
        star += invariants::star_violations(ig, &stars);
        c4 += invariants::c4_violations(ig, &squares);
      }
    std::ostringstream s;
    s << "violations/instances: claw " << claw << "/" << paths << ", distance " << dist << "/"
      << pairs << ", K1,m " << star << "/" << stars << ", C4 " << c4 << "/" << squares;
    c.expect(claw + dist + star + c4 == 0, s.str());
    c.expect(paths > 0 && pairs > 0 && stars > 0 && squares > 0, "vacuous: " + s.str());
    c.note(s.str());
  });

  criterion(10, "forests <= 7, block graphs <= 6, unicyclic <= 6 certify", 300.0, [](Checker& c) {
    std::size_t forests = 0, blocks = 0, unicyclic = 0;
    for (int n = 1; n <= 7; ++n)
      for (const auto& g : corpus7()[n - 1]) {
        if (is_forest(g)) {
          ++forests;
          const auto r = seed_forest(g);
          c.expect(sound(r) && r.target == g, "forest " + emit_graph6(g));
        }
        if (n > 6) continue;
        if (is_block_graph(g)) {
          ++blocks;
          const auto r = seed_block_graph(g);
          c.expect(sound(r) && r.target == g, "block graph " + emit_graph6(g));
        }
        if (is_unicyclic(g)) {
          ++unicyclic;
          const auto r = seed_unicyclic(g);
          c.expect(sound(r) && r.target == g, "unicyclic " + emit_graph6(g));
        }
      }
    c.note(std::to_string(forests) + " forests, " + std::to_string(blocks) + " block graphs, " +
           std::to_string(unicyclic) + " unicyclic graphs");
  });

  criterion(11, "randomized lemma checks, 100 cases each", 120.0, [](Checker& c) {
    std::mt19937 rng(20240611);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = random_recipe(rng);
      const auto k = r.i_number() + static_cast<std::size_t>(pick(0, 3));
      const auto out = inflate(r, k);
      c.expect(sound(out) && out.i_number() == k && same_labels(r, out), "inflate");
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = random_recipe(rng);
      const auto out = attach_k13(r, pick(0, static_cast<int>(r.seed.order()) - 1));
      c.expect(sound(out) && out.i_number() == r.i_number() + 1 && same_labels(r, out), "attach_k13");
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = random_recipe(rng);
      const auto out = epn_normalize(r);
      bool all_nonempty = true;
      for (const auto& s : out.labels)
        s.for_each([&](Vertex v) { all_nonempty &= !private_neighborhood(out.seed, s, v).epn.empty(); });
      c.expect(sound(out) && same_labels(r, out) && all_nonempty, "epn_normalize");
    }
    for (int trial = 0; trial < 100; ++trial) {
      auto r = random_recipe(rng);
      if (r.target.order() < 2) r = add_isolated_to_target(r);
      const Vertex x = pick(0, static_cast<int>(r.target.order()) - 1);
      const auto out = delete_vertex_from_target(r, x);
      bool kept = out.target == remove_vertex(r.target, x);
      for (Vertex t = 0; t < static_cast<Vertex>(out.target.order()); ++t)
        kept = kept && out.label(t).resized(r.seed.order()) == r.label(t < x ? t : t + 1);
      c.expect(sound(out) && kept, "delete_vertex_from_target");
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = random_recipe(rng);
      const auto cliques = maximal_cliques(r.target);
      const auto& q = cliques[pick(0, static_cast<int>(cliques.size()) - 1)];
      const auto out = max_clique_replace(r, q);
      const auto n = static_cast<Vertex>(r.target.order());
      const bool shape = out.target.order() == r.target.order() + 1 &&
                         out.target.neighbors(n) == q.resized(n + 1) &&
                         remove_vertex(out.target, n) == r.target;
      c.expect(sound(out) && shape, "max_clique_replace");
    }
  });

  criterion(12, "graph6 round trip on every generated graph with <= 7 vertices", 10.0,
            [](Checker& c) {
              std::size_t count = 0;
              for (const auto& level : corpus7())
                for (const auto& g : level) {
                  ++count;
                  const auto s = emit_graph6(g);
                  c.expect(parse_graph6(s) == g && emit_graph6(parse_graph6(s)) == s, s);
                }
              c.note(std::to_string(count) + " graphs");
            });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
