#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "islide/families.hpp"
#include "islide/graph6.hpp"
#include "islide/search.hpp"
#include "oracles.hpp"

using namespace islide;

TEST_CASE("generation counts") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(generate_nonisomorphic(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(generate_nonisomorphic(0), ParameterError);
  CHECK_THROWS_AS(generate_nonisomorphic(9), ParameterError);
}

TEST_CASE("generation matches brute-force deduplication up to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> brute;
    const auto edges = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << edges); ++mask)
      brute.insert(oracle::brute_canonical_code(oracle::from_mask(n, mask)));
    std::set<std::string> generated;
    for (const auto& g : generate_nonisomorphic(n))
      generated.insert(oracle::brute_canonical_code(g));
    CHECK(generated == brute);
    CHECK(generate_nonisomorphic(n).size() == brute.size());
  }
}

TEST_CASE("generation is deterministic and canonical") {
  auto a = generate_nonisomorphic(6), b = generate_nonisomorphic(6);
  CHECK(a == b);
  for (const auto& g : a) REQUIRE(canonical_graph(g) == g);
}

TEST_CASE("obstructions") {
  auto hit = find_obstruction(family::wheel(5));
  REQUIRE(hit);
  CHECK(hit->pattern == "diamond");
  for (const auto& tree : {family::path(6), family::star(5), Graph(3)}) CHECK_FALSE(find_obstruction(tree));
  auto kappa = find_obstruction(family::theta(2, 2, 3));
  REQUIRE(kappa);
  CHECK(kappa->pattern == "kappa");
  CHECK(find_obstruction(family::theta(2, 2, 2))->pattern == "K2,3");
}

TEST_CASE("star lower bound") {
  CHECK(star_lower_bound(family::star(4)) == 4);
  CHECK(star_lower_bound(family::complete(4)) == 0);
  CHECK(star_lower_bound(family::path(3)) == 2);
  CHECK(star_lower_bound(family::theta(2, 2, 2)) == 3);
}

TEST_CASE("seed search") {
  const auto corpus = generate_corpus(6);
  auto c4 = search_seed(family::cycle(4), corpus);
  REQUIRE(c4.found());
  const auto& f = std::get<SearchFound>(c4.result);
  CHECK(f.order == 4);
  CHECK(is_isomorphism(build_igraph(f.seed).skeleton, family::cycle(4), f.certificate));

  auto k1 = search_seed(Graph(1), corpus);
  REQUIRE(k1.found());
  CHECK(std::get<SearchFound>(k1.result).seed == Graph(1));

  for (const auto& target : {family::theta(1, 2, 2), family::theta(2, 2, 2), family::theta(2, 2, 3)}) {
    auto o = search_seed(target, corpus, {1, true});
    REQUIRE_FALSE(o.found());
    const auto& e = std::get<SearchExhausted>(o.result);
    CHECK(e.max_n == 6);
    std::size_t total = 0;
    for (const auto& c : e.counts) {
      CHECK(c.pruned + c.examined == c.graphs);
      total += c.graphs;
    }
    CHECK(total == 1 + 2 + 4 + 11 + 34 + 156);
  }
  CHECK_THROWS_AS(search_seed(Graph(1), 9), ParameterError);
  CHECK_THROWS_AS(search_seed(Graph(1), 0), ParameterError);
}

TEST_CASE("parallel search gives the single-threaded answer") {
  const auto corpus = generate_corpus(6);
  for (const auto& target : {family::path(4), family::cycle(6), family::star(3), family::house()}) {
    auto one = search_seed(target, corpus, {1, false});
    auto four = search_seed(target, corpus, {4, true});
    REQUIRE(one.found() == four.found());
    if (one.found()) {
      const auto& a = std::get<SearchFound>(one.result);
      const auto& b = std::get<SearchFound>(four.result);
      CHECK(a.order == b.order);
      CHECK(a.index == b.index);
      CHECK(a.certificate == b.certificate);
    }
  }
}
