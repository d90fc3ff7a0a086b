#include <catch2/catch_amalgamated.hpp>

#include "islide/domination.hpp"
#include "islide/families.hpp"
#include "islide/search.hpp"
#include "oracles.hpp"

using namespace islide;

namespace {

std::vector<std::vector<Vertex>> lists(const ISetCatalog& c) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : c.isets) out.push_back(s.members());
  return out;
}

}  // namespace

TEST_CASE("independence and domination predicates") {
  auto c5 = family::cycle(5);  // x1..x5 = 0..4
  CHECK(is_independent(c5, VertexSet(5, {0, 2})));
  CHECK_FALSE(is_independent(c5, VertexSet(5, {0, 1})));
  CHECK_FALSE(is_independent(family::complete(3), VertexSet(3, {1, 2})));
  CHECK(is_dominating(c5, VertexSet(5, {0, 2})));
  CHECK_FALSE(is_dominating(c5, VertexSet(5, {0})));
  CHECK(is_dominating(family::empty(3), VertexSet::full(3)));
  CHECK_THROWS_AS(is_dominating(c5, VertexSet(4, {0})), ArgumentError);
}

TEST_CASE("private neighbourhoods") {
  auto c4 = family::cycle(4);  // a, b, c, d = 0..3
  auto p = private_neighborhood(c4, VertexSet(4, {0, 2}), 0);
  CHECK(p.pn.members() == std::vector<Vertex>{0});
  CHECK(p.epn.empty());

  auto q = private_neighborhood(family::cycle(5), VertexSet(5, {0, 2}), 0);
  CHECK(q.pn.members() == std::vector<Vertex>{0, 4});
  CHECK(q.epn.members() == std::vector<Vertex>{4});

  auto k1 = private_neighborhood(Graph(1), VertexSet(1, {0}), 0);
  CHECK(k1.pn.members() == std::vector<Vertex>{0});
  CHECK(k1.epn.empty());

  CHECK_THROWS_AS(private_neighborhood(c4, VertexSet(4, {0, 2}), 1), ArgumentError);
}

TEST_CASE("i-set catalogs of small families") {
  auto c5 = enumerate_isets(family::cycle(5));
  CHECK(c5.i_number == 2);
  CHECK(lists(c5) == std::vector<std::vector<Vertex>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});

  for (int n = 1; n <= 6; ++n) {
    auto kn = enumerate_isets(family::complete(n));
    CHECK(kn.i_number == 1);
    CHECK(kn.isets.size() == static_cast<std::size_t>(n));
  }

  for (int k = 7; k <= 12; ++k) {
    auto c = enumerate_isets(family::far_circulant(k));
    CHECK(c.i_number == 3);
    REQUIRE(c.isets.size() == static_cast<std::size_t>(k));
    for (Vertex i = 0; i < k; ++i)
      CHECK(c.index_of(VertexSet(k, {i, (i + 1) % k, (i + 2) % k})) >= 0);
  }

  CHECK_THROWS_AS(enumerate_isets(Graph(0)), EmptyGraphError);
  CHECK(independent_domination_number(family::star(5)) == 1);
  CHECK(independent_domination_number(family::empty(4)) == 4);
}

TEST_CASE("catalog matches subset enumeration on every graph up to seven vertices") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : generate_nonisomorphic(n)) {
      const auto catalog = enumerate_isets(g);
      const auto expected = oracle::brute_isets(g);
      REQUIRE(lists(catalog) == expected);
      REQUIRE(catalog.i_number == expected.front().size());
      for (const auto& s : catalog.isets) {
        REQUIRE(is_independent(g, s));
        REQUIRE(is_dominating(g, s));
        // Maximality: no outside vertex can be added independently.
        for (Vertex v = 0; v < n; ++v) {
          if (s.contains(v)) continue;
          auto bigger = s;
          bigger.insert(v);
          REQUIRE_FALSE(is_independent(g, bigger));
        }
        // Minimality: dropping v leaves pn(v, S) undominated.
        s.for_each([&](Vertex v) {
          auto smaller = s;
          smaller.erase(v);
          const auto pn = private_neighborhood(g, s, v).pn;
          REQUIRE_FALSE(pn.empty());
          REQUIRE_FALSE(pn.is_subset_of(g.closed_neighborhood(smaller)));
        });
      }
    }
  }
}

TEST_CASE("catalog of a labelled graph follows the vertex numbering") {
  // Relabelling changes the sets but not their number or size.
  auto g = family::house();
  auto h = relabel(g, {4, 2, 0, 1, 3});
  auto cg = enumerate_isets(g), ch = enumerate_isets(h);
  CHECK(cg.i_number == ch.i_number);
  CHECK(cg.isets.size() == ch.isets.size());
  CHECK(lists(ch) == oracle::brute_isets(h));
}
