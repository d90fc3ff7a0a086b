#pragma once

#include <algorithm>
#include <vector>

#include "islide/errors.hpp"
#include "islide/graph.hpp"

namespace islide {

inline void require_bound(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ArgumentError("vertex set bound to a different graph");
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  return g.closed_neighborhood(s) == g.vertices();
}

struct PrivateNeighborhood {
  VertexSet pn;   // N[v] - N[S - {v}]
  VertexSet epn;  // pn - {v}
};

inline PrivateNeighborhood private_neighborhood(const Graph& g, const VertexSet& s, Vertex v) {
  require_bound(g, s);
  if (!s.contains(v)) throw ArgumentError("private_neighborhood: vertex is not in the set");
  auto others = s;
  others.erase(v);
  PrivateNeighborhood out;
  out.pn = g.closed_neighborhood(v) - g.closed_neighborhood(others);
  out.epn = out.pn;
  out.epn.erase(v);
  return out;
}

// i(G) and every minimum independent dominating set, sorted
// lexicographically by member list.
struct ISetCatalog {
  std::size_t i_number = 0;
  std::vector<VertexSet> isets;

  // Index of `s` in the catalog, or -1.
  int index_of(const VertexSet& s) const {
    auto it = std::lower_bound(isets.begin(), isets.end(), s);
    return it != isets.end() && *it == s ? static_cast<int>(it - isets.begin()) : -1;
  }
};

namespace detail {

// Branch and bound over independent dominating sets. At each node the
// undominated vertex with the fewest admissible dominators is chosen and the
// search branches on which of those dominators joins the set; dominators tried
// earlier at the same node are excluded from later branches, so every
// independent dominating set is reached exactly once.
class ISetEnumerator {
 public:
  explicit ISetEnumerator(const Graph& g) : g_(g), all_(g.vertices()) {}

  ISetCatalog run() {
    best_ = greedy_bound();
    VertexSet chosen = g_.empty_set();
    dfs(chosen, g_.empty_set(), g_.empty_set(), 0);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return {best_, std::move(found_)};
  }

 private:
  std::size_t greedy_bound() const {
    VertexSet dominated = g_.empty_set();
    std::size_t count = 0;
    while (dominated != all_) {
      Vertex pick = -1;
      std::size_t gain = 0;
      (all_ - dominated).for_each([&](Vertex v) {
        auto c = (g_.closed_neighborhood(v) - dominated).size();
        if (pick == -1 || c > gain) {
          pick = v;
          gain = c;
        }
      });
      dominated |= g_.closed_neighborhood(pick);
      ++count;
    }
    return count;
  }

  void dfs(VertexSet& chosen, const VertexSet& dominated, VertexSet excluded, std::size_t count) {
    if (dominated == all_) {
      if (count < best_) {
        best_ = count;
        found_.clear();
      }
      found_.push_back(chosen);
      return;
    }
    if (count >= best_) return;

    const auto undominated = all_ - dominated;
    const auto blocked = dominated | excluded;
    Vertex pivot = -1;
    std::size_t fewest = 0;
    undominated.for_each([&](Vertex u) {
      if (pivot != -1 && fewest == 0) return;
      auto c = (g_.closed_neighborhood(u) - blocked).size();
      if (pivot == -1 || c < fewest) {
        pivot = u;
        fewest = c;
      }
    });
    if (fewest == 0) return;

    const auto candidates = (g_.closed_neighborhood(pivot) - blocked).members();
    for (Vertex v : candidates) {
      if (count >= best_) return;
      chosen.insert(v);
      dfs(chosen, dominated | g_.closed_neighborhood(v), excluded, count + 1);
      chosen.erase(v);
      excluded.insert(v);
    }
  }

  const Graph& g_;
  VertexSet all_;
  std::size_t best_ = 0;
  std::vector<VertexSet> found_;
};

}  // namespace detail

inline ISetCatalog enumerate_isets(const Graph& g) {
  if (g.order() == 0) throw EmptyGraphError();
  return detail::ISetEnumerator(g).run();
}

inline std::size_t independent_domination_number(const Graph& g) {
  return enumerate_isets(g).i_number;
}

}  // namespace islide
