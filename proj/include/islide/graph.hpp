#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "islide/errors.hpp"
#include "islide/vertex_set.hpp"

namespace islide {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the vertices 0..order()-1 with a dense adjacency
// matrix. Every row is a VertexSet over the full vertex range.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}
  Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    return twice / 2;
  }

  bool valid(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  void add_edge(Vertex u, Vertex v) {
    if (!valid(u) || !valid(v))
      throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + "-" +
                          std::to_string(v));
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    if (!valid(u) || !valid(v)) throw ArgumentError("edge endpoint out of range");
    rows_[u].erase(v);
    rows_[v].erase(u);
  }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }

  VertexSet closed_neighborhood(Vertex v) const {
    auto s = rows_[v];
    s.insert(v);
    return s;
  }
  // N[S]
  VertexSet closed_neighborhood(const VertexSet& s) const {
    auto out = s;
    s.for_each([&](Vertex v) { out |= rows_[v]; });
    return out;
  }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  // Edges as (u, v) with u < v in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d;
    for (const auto& r : rows_) d.push_back(r.size());
    std::sort(d.begin(), d.end());
    return d;
  }

  // Copy with `extra` isolated vertices appended.
  Graph with_extra_vertices(std::size_t extra) const {
    Graph g(order() + extra);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
};

// Image of `g` under `perm`, where vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw ArgumentError("relabel: permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

// g1's vertices keep their ids; g2's vertex v becomes |V(g1)| + v.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph out = g1.with_extra_vertices(g2.order());
  const auto off = static_cast<Vertex>(g1.order());
  for (auto [u, v] : g2.edges()) out.add_edge(u + off, v + off);
  return out;
}

// Disjoint union plus every edge between the two parts. Numbering as in
// disjoint_union.
inline Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union(g1, g2);
  const auto off = static_cast<Vertex>(g1.order());
  for (Vertex u = 0; u < off; ++u)
    for (Vertex v = 0; v < static_cast<Vertex>(g2.order()); ++v) out.add_edge(u, v + off);
  return out;
}

// Vertex (a, b) is numbered a * |V(g2)| + b.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const auto n2 = static_cast<Vertex>(g2.order());
  Graph out(g1.order() * g2.order());
  for (Vertex a = 0; a < static_cast<Vertex>(g1.order()); ++a)
    for (auto [u, v] : g2.edges()) out.add_edge(a * n2 + u, a * n2 + v);
  for (auto [u, v] : g1.edges())
    for (Vertex b = 0; b < n2; ++b) out.add_edge(u * n2 + b, v * n2 + b);
  return out;
}

enum class Combinator { disjoint_union, join, cartesian_product };

inline Graph combine(Combinator op, const Graph& g1, const Graph& g2) {
  switch (op) {
    case Combinator::disjoint_union:
      return disjoint_union(g1, g2);
    case Combinator::join:
      return join(g1, g2);
    case Combinator::cartesian_product:
      return cartesian_product(g1, g2);
  }
  return {};
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_of_old;  // -1 for vertices not kept
  std::vector<Vertex> old_of_new;
};

// Kept vertices are renumbered in ascending order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order())
    throw ArgumentError("induced_subgraph: vertex set bound to a different graph");
  InducedSubgraph out;
  out.old_of_new = keep.members();
  out.new_of_old.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.old_of_new.size(); ++i)
    out.new_of_old[out.old_of_new[i]] = static_cast<Vertex>(i);
  out.graph = Graph(out.old_of_new.size());
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      out.graph.add_edge(out.new_of_old[u], out.new_of_old[v]);
  return out;
}

// g with vertex x removed; vertices above x shift down by one.
inline Graph remove_vertex(const Graph& g, Vertex x) {
  auto keep = g.vertices();
  keep.erase(x);
  return induced_subgraph(g, keep).graph;
}

}  // namespace islide
