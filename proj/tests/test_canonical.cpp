#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "islide/canonical.hpp"
#include "islide/families.hpp"
#include "islide/graph6.hpp"
#include "oracles.hpp"

using namespace islide;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b);
  return g;
}

std::vector<Vertex> random_perm(std::mt19937& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical form examples") {
  auto c5 = family::cycle(5);
  CHECK(canonical_form(c5) == canonical_form(relabel(c5, {4, 3, 2, 1, 0})));
  CHECK(canonical_form(family::star(3)) != canonical_form(family::path(4)));
  CHECK(canonical_form(Graph(0)).n == 0);
}

TEST_CASE("34 isomorphism classes on five vertices") {
  std::set<CanonicalForm> forms;
  for (unsigned long long mask = 0; mask < (1ull << 10); ++mask)
    forms.insert(canonical_form(oracle::from_mask(5, mask)));
  CHECK(forms.size() == 34);
}

TEST_CASE("canonical forms agree with brute force up to six vertices") {
  // Two labelled graphs share a canonical form iff they share the brute-force
  // minimum over all permutations.
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> fast_to_brute, brute_to_fast;
    const auto edges = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << edges); ++mask) {
      auto g = oracle::from_mask(n, mask);
      const auto fast = canonical_form(g).code;
      const auto brute = oracle::brute_canonical_code(g);
      auto [a, fresh_a] = fast_to_brute.emplace(fast, brute);
      auto [b, fresh_b] = brute_to_fast.emplace(brute, fast);
      REQUIRE(a->second == brute);
      REQUIRE(b->second == fast);
    }
    INFO("n = " << n);
    CHECK(fast_to_brute.size() == std::vector<std::size_t>{0, 1, 2, 4, 11, 34, 156}[n]);
  }
}

TEST_CASE("canonical form is permutation invariant on random graphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    auto g = random_graph(rng, n, 0.4);
    auto h = relabel(g, random_perm(rng, n));
    REQUIRE(canonical_form(g) == canonical_form(h));
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso);
    REQUIRE(is_isomorphism(g, h, *iso));
  }
}

TEST_CASE("canonical forms separate graphs with different invariants") {
  std::mt19937 rng(99);
  int compared = 0;
  while (compared < 200) {
    const int n = 3 + static_cast<int>(rng() % 8);
    auto g = random_graph(rng, n, 0.5), h = random_graph(rng, n, 0.5);
    if (g.degree_sequence() == h.degree_sequence()) continue;
    ++compared;
    REQUIRE(canonical_form(g) != canonical_form(h));
    REQUIRE_FALSE(find_isomorphism(g, h));
  }
}

TEST_CASE("canonical labelling handles vertex-transitive graphs") {
  auto q5 = family::hypercube(5);
  std::mt19937 rng(5);
  auto shuffled = relabel(q5, random_perm(rng, 32));
  CHECK(canonical_form(q5) == canonical_form(shuffled));
  auto petersen = parse_graph6("IheA@GUAo");
  CHECK(isomorphic(petersen, relabel(petersen, random_perm(rng, 10))));
  auto prism = cartesian_product(family::cycle(5), family::complete(2));
  CHECK(prism.degree_sequence() == petersen.degree_sequence());
  CHECK_FALSE(isomorphic(petersen, prism));
}

TEST_CASE("find_isomorphism examples") {
  auto tri = family::complete(3);
  auto iso = find_isomorphism(tri, relabel(tri, {2, 0, 1}));
  REQUIRE(iso);
  CHECK(is_isomorphism(tri, tri, *iso));
  CHECK_FALSE(find_isomorphism(cartesian_product(family::complete(2), family::complete(3)),
                               family::cycle(6)));
  Graph k4_minus_e = family::complete(4);
  k4_minus_e.remove_edge(1, 3);
  auto d = find_isomorphism(family::theta(1, 2, 2), k4_minus_e);
  REQUIRE(d);
  CHECK(is_isomorphism(family::theta(1, 2, 2), k4_minus_e, *d));
  CHECK_FALSE(is_isomorphism(tri, tri, {0, 0, 1}));
}

TEST_CASE("induced copies") {
  auto diamond = family::theta(1, 2, 2);
  auto hit = find_induced_copy(family::wheel(5), diamond);
  REQUIRE(hit);
  CHECK(isomorphic(induced_subgraph(family::wheel(5), *hit).graph, diamond));
  CHECK_FALSE(find_induced_copy(family::cycle(6), diamond));
  auto k23 = family::complete_bipartite(2, 3);
  auto all = find_induced_copy(k23, k23);
  REQUIRE(all);
  CHECK(all->size() == 5);
  // K4 contains a diamond as a subgraph but not as an induced subgraph.
  CHECK_FALSE(find_induced_copy(family::complete(4), diamond));
  CHECK_FALSE(find_induced_copy(family::complete(3), family::complete(4)));
}

TEST_CASE("induced copy search agrees with subset enumeration") {
  std::mt19937 rng(31);
  const Graph patterns[] = {family::theta(1, 2, 2), family::path(3), family::cycle(4),
                            family::star(3)};
  for (int trial = 0; trial < 100; ++trial) {
    auto host = random_graph(rng, 7, 0.45);
    for (const auto& p : patterns) {
      bool expected = false;
      for (unsigned mask = 0; mask < 128 && !expected; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != p.order()) continue;
        VertexSet keep(7);
        for (Vertex v = 0; v < 7; ++v)
          if (mask >> v & 1u) keep.insert(v);
        expected = isomorphic(induced_subgraph(host, keep).graph, p);
      }
      auto hit = find_induced_copy(host, p);
      REQUIRE(hit.has_value() == expected);
      if (hit) REQUIRE(isomorphic(induced_subgraph(host, *hit).graph, p));
    }
  }
}
