#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "islide/canonical.hpp"
#include "islide/errors.hpp"
#include "islide/families.hpp"
#include "islide/graph.hpp"
#include "islide/igraph.hpp"

namespace islide {

inline constexpr int kMaxSearchOrder = 8;

// One canonical representative per isomorphism class on n vertices, sorted by
// canonical code. Classes on n vertices are obtained by adding a vertex with
// every possible neighbourhood to each class on n - 1 vertices.
inline std::vector<Graph> generate_nonisomorphic(int n) {
  if (n < 1 || n > kMaxSearchOrder)
    throw ParameterError("generate_nonisomorphic: n must be in 1.." + std::to_string(kMaxSearchOrder));
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> next;
    for (const auto& g : level) {
      for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        Graph h = g.with_extra_vertices(1);
        for (int v = 0; v < m - 1; ++v)
          if (mask >> v & 1u) h.add_edge(v, m - 1);
        auto c = canonical_graph(h);
        auto code = canonical_form(c).code;
        if (seen.insert(code).second) next.emplace_back(std::move(code), std::move(c));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

// corpus[n - 1] = generate_nonisomorphic(n) for n = 1..max_n.
inline std::vector<std::vector<Graph>> generate_corpus(int max_n) {
  if (max_n < 1 || max_n > kMaxSearchOrder)
    throw ParameterError("max_n must be in 1.." + std::to_string(kMaxSearchOrder));
  std::vector<std::vector<Graph>> corpus;
  for (int n = 1; n <= max_n; ++n) corpus.push_back(generate_nonisomorphic(n));
  return corpus;
}

struct Obstruction {
  std::string pattern;
  VertexSet vertices;
};

// First induced diamond, K_{2,3} or theta(2,2,3), checked in that order.
inline std::optional<Obstruction> find_obstruction(const Graph& h) {
  const std::pair<const char*, Graph> patterns[] = {
      {"diamond", family::theta(1, 2, 2)},
      {"K2,3", family::theta(2, 2, 2)},
      {"kappa", family::theta(2, 2, 3)},
  };
  for (const auto& [name, p] : patterns)
    if (auto hit = find_induced_copy(h, p)) return Obstruction{name, *hit};
  return std::nullopt;
}

// Largest deg(X) over target vertices X whose neighbourhood is independent.
// Any seed of the target has at least this independent domination number.
inline std::size_t star_lower_bound(const Graph& target) {
  std::size_t bound = 0;
  for (Vertex x = 0; x < static_cast<Vertex>(target.order()); ++x) {
    const auto nx = target.neighbors(x);
    bool independent = true;
    nx.for_each([&](Vertex u) { independent = independent && !nx.intersects(target.neighbors(u)); });
    if (independent) bound = std::max(bound, nx.size());
  }
  return bound;
}

struct SearchOptions {
  int jobs = 1;
  // Evaluate pruned candidates as well and fail if any of them would have
  // been a seed. On by default in debug builds.
#ifdef NDEBUG
  bool verify_pruning = false;
#else
  bool verify_pruning = true;
#endif
};

struct SearchFound {
  Graph seed;
  int order = 0;            // seed order n
  std::size_t index = 0;    // position in generate_nonisomorphic(n)
  std::vector<Vertex> certificate;  // skeleton vertex j -> target vertex
};

struct SearchCount {
  int n = 0;
  std::size_t graphs = 0;
  std::size_t pruned = 0;
  std::size_t examined = 0;
};

struct SearchExhausted {
  int max_n = 0;
  std::vector<SearchCount> counts;
};

struct SearchOutcome {
  Graph target;
  std::variant<SearchFound, SearchExhausted> result;

  bool found() const { return std::holds_alternative<SearchFound>(result); }
};

namespace detail {

inline std::optional<std::vector<Vertex>> seed_match(const Graph& candidate, const Graph& target) {
  const auto catalog = enumerate_isets(candidate);
  if (catalog.isets.size() != target.order()) return std::nullopt;
  return find_isomorphism(build_igraph(candidate).skeleton, target);
}

}  // namespace detail

// Scans the corpus in order (by n, then by position) and returns the first
// seed whose i-graph is isomorphic to the target. The answer does not depend
// on the number of jobs.
inline SearchOutcome search_seed(const Graph& target, const std::vector<std::vector<Graph>>& corpus,
                                 const SearchOptions& options = {}) {
  if (target.order() == 0) throw EmptyGraphError();
  if (options.jobs < 1) throw ParameterError("jobs must be at least 1");
  const auto bound = star_lower_bound(target);
  SearchExhausted exhausted{static_cast<int>(corpus.size()), {}};

  for (std::size_t level = 0; level < corpus.size(); ++level) {
    const auto& graphs = corpus[level];
    const auto total = graphs.size();
    std::atomic<std::size_t> first_hit{total};
    std::atomic<std::size_t> pruned{0}, examined{0};
    std::atomic<bool> unsound{false};

    auto worker = [&](std::size_t start) {
      for (std::size_t k = start; k < total; k += static_cast<std::size_t>(options.jobs)) {
        if (k > first_hit.load()) return;
        const Graph& g = graphs[k];
        const bool skip = independent_domination_number(g) < bound;
        if (skip) {
          ++pruned;
          if (options.verify_pruning && detail::seed_match(g, target)) unsound = true;
          continue;
        }
        ++examined;
        if (detail::seed_match(g, target)) {
          auto cur = first_hit.load();
          while (k < cur && !first_hit.compare_exchange_weak(cur, k)) {
          }
          return;
        }
      }
    };
    if (options.jobs == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (int j = 0; j < options.jobs; ++j) pool.emplace_back(worker, static_cast<std::size_t>(j));
    }
    if (unsound) throw CertificationError("search pruning skipped a valid seed");
    if (first_hit < total) {
      const Graph& seed = graphs[first_hit];
      auto cert = detail::seed_match(seed, target);
      return {target, SearchFound{seed, static_cast<int>(level + 1), first_hit.load(), *cert}};
    }
    exhausted.counts.push_back({static_cast<int>(level + 1), total, pruned.load(), examined.load()});
  }
  return {target, exhausted};
}

inline SearchOutcome search_seed(const Graph& target, int max_n, const SearchOptions& options = {}) {
  return search_seed(target, generate_corpus(max_n), options);
}

}  // namespace islide
