#pragma once

#include <map>
#include <utility>
#include <vector>

#include "islide/domination.hpp"
#include "islide/errors.hpp"
#include "islide/graph.hpp"

namespace islide {

// Token move <X, from, to, Y>: Y = (X - {from}) + {to}.
struct Slide {
  Vertex from = -1;
  Vertex to = -1;
  friend bool operator==(const Slide&, const Slide&) = default;
};

enum class ReconfigurationModel { slide, jump };

// Reconfiguration graph of the i-sets of `base`. Skeleton vertex j is
// catalog.isets[j]; every skeleton edge carries its token move in both
// orientations.
struct IGraph {
  Graph base;
  ISetCatalog catalog;
  Graph skeleton;
  std::map<std::pair<int, int>, Slide> slides;

  const VertexSet& iset(int j) const { return catalog.isets[j]; }
  std::size_t i_number() const { return catalog.i_number; }

  Slide slide(int from_set, int to_set) const { return slides.at({from_set, to_set}); }
};

namespace detail {

inline IGraph build_reconfiguration_graph(const Graph& g, ReconfigurationModel model) {
  IGraph h;
  h.base = g;
  h.catalog = enumerate_isets(g);
  const auto m = static_cast<int>(h.catalog.isets.size());
  h.skeleton = Graph(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const auto& x = h.catalog.isets[a];
      const auto& y = h.catalog.isets[b];
      auto only_x = x - y;
      if (only_x.size() != 1) continue;
      const Vertex from = *only_x.first();
      const Vertex to = *(y - x).first();
      if (model == ReconfigurationModel::slide && !g.adjacent(from, to)) continue;
      h.skeleton.add_edge(a, b);
      h.slides[{a, b}] = {from, to};
      h.slides[{b, a}] = {to, from};
    }
  }
  return h;
}

}  // namespace detail

inline IGraph build_igraph(const Graph& g) {
  return detail::build_reconfiguration_graph(g, ReconfigurationModel::slide);
}

// Token-jump variant: i-sets adjacent whenever they differ in one token.
inline IGraph build_jump_graph(const Graph& g) {
  return detail::build_reconfiguration_graph(g, ReconfigurationModel::jump);
}

// Tokens of the i-set `s` that cannot move. The token at v can slide iff
// some u in epn(v, S) dominates pn(v, S).
inline VertexSet frozen_tokens(const Graph& g, const VertexSet& s) {
  require_bound(g, s);
  if (!is_independent(g, s) || !is_dominating(g, s) || s.size() != independent_domination_number(g))
    throw ArgumentError("frozen_tokens: set is not an i-set");
  VertexSet frozen = g.empty_set();
  s.for_each([&](Vertex v) {
    auto [pn, epn] = private_neighborhood(g, s, v);
    bool movable = false;
    epn.for_each([&](Vertex u) {
      if (!movable && pn.is_subset_of(g.closed_neighborhood(u))) movable = true;
    });
    if (!movable) frozen.insert(v);
  });
  return frozen;
}

}  // namespace islide
