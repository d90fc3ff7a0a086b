#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

// Isomorphism-invariant code of a graph: the upper-triangle adjacency bits
// (row-major, '0'/'1') of the canonically relabelled graph.
struct CanonicalForm {
  std::size_t n = 0;
  std::string code;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> order;  // order[p] = vertex placed at canonical position p
};

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;

// Refines an ordered partition until it is equitable. Cells split by the
// vector of neighbour counts into every current cell; the pieces keep the
// position of their parent cell, ordered by that vector.
inline void refine(const Graph& g, Cells& cells) {
  const auto n = g.order();
  std::vector<int> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
    bool split = false;
    Cells next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> counts(cells.size(), 0);
        g.neighbors(v).for_each([&](Vertex u) { ++counts[cell_of[u]]; });
        keyed.emplace_back(std::move(counts), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Vertex> piece{keyed[0].second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(piece));
          piece.clear();
          split = true;
        }
        piece.push_back(keyed[i].second);
      }
      next.push_back(std::move(piece));
    }
    cells = std::move(next);
    if (!split) return;
  }
}

inline bool twins(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  a.erase(v);
  b.erase(u);
  return a == b;
}

inline std::string leaf_code(const Graph& g, const Cells& cells) {
  std::string code;
  const auto n = cells.size();
  code.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      code.push_back(g.adjacent(cells[i][0], cells[j][0]) ? '1' : '0');
  return code;
}

// Individualisation-refinement search over the whole tree; the smallest leaf
// code wins. Individualising either vertex of a twin pair leads to
// automorphic subtrees, so one vertex per twin class is tried.
inline void search(const Graph& g, Cells cells, std::optional<CanonicalLabeling>& best) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    auto code = leaf_code(g, cells);
    if (!best || code < best->form.code) {
      CanonicalLabeling l;
      l.form = {g.order(), std::move(code)};
      for (const auto& c : cells) l.order.push_back(c[0]);
      best = std::move(l);
    }
    return;
  }
  const auto idx = static_cast<std::size_t>(target - cells.begin());
  const auto cell = *target;
  std::vector<Vertex> reps;
  for (Vertex v : cell)
    if (std::none_of(reps.begin(), reps.end(), [&](Vertex r) { return twins(g, r, v); }))
      reps.push_back(v);
  for (Vertex v : reps) {
    Cells child;
    child.reserve(cells.size() + 1);
    child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(idx));
    child.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex u : cell)
      if (u != v) rest.push_back(u);
    child.push_back(std::move(rest));
    child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, cells.end());
    search(g, std::move(child), best);
  }
}

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  detail::Cells cells(1);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) cells[0].push_back(v);
  std::optional<CanonicalLabeling> best;
  detail::search(g, std::move(cells), best);
  return *best;
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

// The canonical representative: vertex order[p] of g becomes p.
inline Graph canonical_graph(const Graph& g) {
  auto l = canonical_labeling(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t p = 0; p < l.order.size(); ++p) perm[l.order[p]] = static_cast<Vertex>(p);
  return relabel(g, perm);
}

// True iff `map` (g-vertex -> h-vertex) is a bijection carrying edges to
// edges and non-edges to non-edges.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<int> hit(h.order(), 0);
  for (Vertex v : map) {
    if (!h.valid(v) || hit[v]++) return false;
  }
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

// Returns map with map[v] = image of g's vertex v in h.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence())
    return std::nullopt;
  auto lg = canonical_labeling(g);
  auto lh = canonical_labeling(h);
  if (lg.form != lh.form) return std::nullopt;
  std::vector<Vertex> map(g.order());
  for (std::size_t p = 0; p < lg.order.size(); ++p) map[lg.order[p]] = lh.order[p];
  if (!is_isomorphism(g, h, map)) return std::nullopt;
  return map;
}

inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// Finds a vertex set of `host` inducing a copy of `pattern` by backtracking
// over injective maps that respect adjacency and non-adjacency.
inline std::optional<VertexSet> find_induced_copy(const Graph& host, const Graph& pattern) {
  const auto k = static_cast<Vertex>(pattern.order());
  const auto n = static_cast<Vertex>(host.order());
  if (k > n) return std::nullopt;
  if (k == 0) return VertexSet(host.order());
  // Pattern vertices in BFS-ish order so each one has placed neighbours early.
  std::vector<Vertex> order;
  std::vector<int> placed(k, 0);
  while (static_cast<Vertex>(order.size()) < k) {
    Vertex pick = -1;
    std::size_t best_links = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : order) links += pattern.adjacent(u, v);
      if (pick == -1 || links > best_links ||
          (links == best_links && pattern.degree(v) > pattern.degree(pick))) {
        pick = v;
        best_links = links;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }
  std::vector<Vertex> image(k, -1);
  std::vector<int> used(n, 0);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const Vertex p = order[depth];
    for (Vertex h = 0; h < n; ++h) {
      if (used[h] || host.degree(h) < pattern.degree(p)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d)
        ok = pattern.adjacent(order[d], p) == host.adjacent(image[order[d]], h);
      if (!ok) continue;
      image[p] = h;
      used[h] = 1;
      if (self(self, depth + 1)) return true;
      used[h] = 0;
    }
    image[p] = -1;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  VertexSet out(host.order());
  for (Vertex h : image) out.insert(h);
  return out;
}

}  // namespace islide
