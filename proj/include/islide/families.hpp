#pragma once

#include <string>
#include <variant>
#include <vector>

#include "islide/errors.hpp"
#include "islide/graph.hpp"

namespace islide {

// Standard families. Numbering is fixed per family and documented on each
// builder so that construction certificates are reproducible.
namespace family {

// Path on k vertices 0-1-...-(k-1).
inline Graph path(int k) {
  if (k < 1) throw ParameterError("path needs at least one vertex");
  Graph g(k);
  for (Vertex v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

// Cycle 0-1-...-(k-1)-0.
inline Graph cycle(int k) {
  if (k < 3) throw ParameterError("cycle needs at least three vertices");
  Graph g = path(k);
  g.add_edge(k - 1, 0);
  return g;
}

inline Graph complete(int n) {
  if (n < 1) throw ParameterError("complete graph needs at least one vertex");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty(int n) {
  if (n < 0) throw ParameterError("negative vertex count");
  return Graph(n);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw ParameterError("complete bipartite parts must be nonempty");
  return join(empty(a), empty(b));
}

// K_{1,m}: centre 0, leaves 1..m.
inline Graph star(int m) {
  if (m < 1) throw ParameterError("star needs at least one leaf");
  return complete_bipartite(1, m);
}

// The K_{1,3} gadget: centre x = 0, leaves y1 = 1, y2 = 2, y3 = 3.
inline Graph k13_gadget() { return star(3); }

// Theta(j, k, l): ends 0 and 1, then the interior vertices of the j-path,
// the k-path and the l-path in order.
inline Graph theta(int j, int k, int l) {
  if (j < 1 || k < 1 || l < 1) throw ParameterError("theta path lengths must be positive");
  if (!(j <= k && k <= l)) throw ParameterError("theta requires j <= k <= l");
  if (k == 1) throw ParameterError("theta allows at most one path of length 1");
  Graph g(j + k + l - 1);
  Vertex next = 2;
  for (int len : {j, k, l}) {
    Vertex prev = 0;
    for (int step = 1; step < len; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

// Square 0-1-2-3-0 with roof vertex 4 adjacent to 0 and 1.
inline Graph house() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
}

// Q_n as the n-fold Cartesian power of K2 (row-major numbering, so vertex ids
// are the bit strings read most-significant coordinate first).
inline Graph hypercube(int n) {
  if (n < 0) throw ParameterError("hypercube dimension must be non-negative");
  Graph g = complete(1);
  for (int i = 0; i < n; ++i) g = cartesian_product(g, complete(2));
  return g;
}

// Hub 0 joined to the rim cycle 1..k.
inline Graph wheel(int k) { return join(complete(1), cycle(k)); }

// n disjoint copies of K2: edges {2i, 2i+1}.
inline Graph matching(int n) {
  if (n < 0) throw ParameterError("negative copy count");
  Graph g(2 * n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

// Circulant on 0..k-1 where i ~ j iff j is not within distance 2 of i (mod k).
inline Graph far_circulant(int k) {
  if (k < 7) throw ParameterError("far circulant needs k >= 7");
  Graph g(k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) {
      int d = (j - i) % k;
      d = std::min(d, k - d);
      if (d > 2) g.add_edge(i, j);
    }
  return g;
}

}  // namespace family

struct Path { int k; };
struct Cycle { int k; };
struct Complete { int n; };
struct CompleteBipartite { int a, b; };
struct Star { int m; };
struct Empty { int n; };
struct Theta { int j, k, l; };
struct House {};
struct K13Gadget {};

using Family =
    std::variant<Path, Cycle, Complete, CompleteBipartite, Star, Empty, Theta, House, K13Gadget>;

inline Graph build_family(const Family& f) {
  struct Visitor {
    Graph operator()(Path p) const { return family::path(p.k); }
    Graph operator()(Cycle c) const { return family::cycle(c.k); }
    Graph operator()(Complete c) const { return family::complete(c.n); }
    Graph operator()(CompleteBipartite c) const { return family::complete_bipartite(c.a, c.b); }
    Graph operator()(Star s) const { return family::star(s.m); }
    Graph operator()(Empty e) const { return family::empty(e.n); }
    Graph operator()(Theta t) const { return family::theta(t.j, t.k, t.l); }
    Graph operator()(House) const { return family::house(); }
    Graph operator()(K13Gadget) const { return family::k13_gadget(); }
  };
  return std::visit(Visitor{}, f);
}

// Family by name with integer parameters, e.g. ("theta", {2, 2, 3}).
inline Family parse_family(const std::string& name, const std::vector<int>& p) {
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw ParameterError(name + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") { need(1); return Path{p[0]}; }
  if (name == "cycle") { need(1); return Cycle{p[0]}; }
  if (name == "complete") { need(1); return Complete{p[0]}; }
  if (name == "complete_bipartite") { need(2); return CompleteBipartite{p[0], p[1]}; }
  if (name == "star") { need(1); return Star{p[0]}; }
  if (name == "empty") { need(1); return Empty{p[0]}; }
  if (name == "theta") { need(3); return Theta{p[0], p[1], p[2]}; }
  if (name == "house") { need(0); return House{}; }
  if (name == "k13_gadget") { need(0); return K13Gadget{}; }
  throw ParameterError("unknown family: " + name);
}

}  // namespace islide
