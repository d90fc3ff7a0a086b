#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      g.neighbors(u).for_each([&](Vertex v) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
          stack.push_back(v);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Dimension of the cycle space: |E| - |V| + #components.
inline std::size_t cyclomatic_number(const Graph& g) {
  return g.size() + connected_components(g).size() - g.order();
}

inline bool is_forest(const Graph& g) { return cyclomatic_number(g) == 0; }

inline bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    auto rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

// A clique no vertex outside it is adjacent to entirely.
inline bool is_maximal_clique(const Graph& g, const VertexSet& s) {
  if (s.empty() || !is_clique(g, s)) return false;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    if (!s.contains(v) && s.is_subset_of(g.neighbors(v))) return false;
  return true;
}

// All maximal cliques (Bron-Kerbosch with pivoting), each as a VertexSet,
// sorted.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p,
                                                                    VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    Vertex pivot = *(p | x).first();
    auto candidates = p - g.neighbors(pivot);
    candidates.for_each([&](Vertex v) {
      auto r2 = r;
      r2.insert(v);
      expand(r2, p & g.neighbors(v), x & g.neighbors(v));
      p.erase(v);
      x.insert(v);
    });
  };
  if (g.order() > 0) expand(g.empty_set(), g.vertices(), g.empty_set());
  std::sort(out.begin(), out.end());
  return out;
}

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  // sorted lists, ordered lexicographically
  std::vector<Vertex> cut_vertices;         // ascending
};

// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) via
// Hopcroft-Tarjan.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  BlockDecomposition out;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    g.neighbors(u).for_each([&](Vertex v) {
      if (disc[v] == -1) {
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Vertex> block;
          while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{u, v}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (v != parent && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    });
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    if (g.degree(s) == 0) {
      disc[s] = timer++;
      out.blocks.push_back({s});
      continue;
    }
    dfs(s, -1);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  std::vector<int> count(n, 0);
  for (const auto& b : out.blocks)
    for (Vertex v : b) ++count[v];
  for (Vertex v = 0; v < n; ++v)
    if (count[v] > 1) out.cut_vertices.push_back(v);
  return out;
}

inline bool is_bridge(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid(u) || !g.valid(v) || !g.adjacent(u, v)) return false;
  Graph h = g;
  h.remove_edge(u, v);
  auto comps = connected_components(h);
  return std::none_of(comps.begin(), comps.end(), [&](const auto& c) {
    return std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v);
  });
}

// Every block is a clique.
inline bool is_block_graph(const Graph& g) {
  for (const auto& b : block_decomposition(g).blocks)
    if (!is_clique(g, VertexSet(g.order(), b))) return false;
  return true;
}

// Every block is a cycle or a single edge (or an isolated vertex).
inline bool is_cactus(const Graph& g) {
  for (const auto& b : block_decomposition(g).blocks) {
    if (b.size() <= 2) continue;
    auto sub = induced_subgraph(g, VertexSet(g.order(), b)).graph;
    if (sub.size() != sub.order()) return false;
  }
  return true;
}

// Exactly one cycle (the graph need not be connected).
inline bool is_unicyclic(const Graph& g) { return cyclomatic_number(g) == 1; }

// Vertices of a cycle graph in traversal order starting from the smallest
// vertex and stepping to its smaller neighbour.
inline std::vector<Vertex> cycle_order(const Graph& cycle_graph) {
  std::vector<Vertex> order{0};
  Vertex prev = -1, cur = 0;
  while (true) {
    Vertex next = -1;
    cycle_graph.neighbors(cur).for_each([&](Vertex v) {
      if (v != prev && next == -1) next = v;
    });
    if (next == 0 || next == -1) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace islide
