#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "islide/canonical.hpp"
#include "islide/domination.hpp"
#include "islide/errors.hpp"
#include "islide/families.hpp"
#include "islide/graph.hpp"
#include "islide/recipe.hpp"
#include "islide/structure.hpp"

// Seed recipes: every operation here returns a recipe certified against its
// target (see certify_labels). Gadget vertices are always appended after the
// existing seed vertices, and each operation documents how the target is
// numbered.
namespace islide {

struct Hypercube {
  int n;
};
using BasicFamily = std::variant<Complete, Hypercube, Cycle, House>;

namespace detail {

inline std::vector<Vertex> range(Vertex from, Vertex to) {
  std::vector<Vertex> v;
  for (Vertex x = from; x < to; ++x) v.push_back(x);
  return v;
}

inline SeedRecipe checked_input(SeedRecipe r) {
  if (!r.certificate) throw ArgumentError("input recipe is not certified");
  if (r.labels.size() != r.target.order()) r = restore_labels(std::move(r));
  return r;
}

inline void require_target_vertex(const SeedRecipe& r, Vertex t) {
  if (!r.target.valid(t))
    throw ArgumentError("target vertex " + std::to_string(t) + " out of range");
}

// Grows the seed by `extra` isolated vertices and rebinds labels to the new
// vertex range. Callers add the gadget edges.
inline void grow_seed(SeedRecipe& r, std::size_t extra) {
  r.seed = r.seed.with_extra_vertices(extra);
  for (auto& l : r.labels) l = l.resized(r.seed.order());
  r.certificate.reset();
}

inline Graph add_target_vertex(const Graph& t, const VertexSet& neighbours) {
  Graph out = t.with_extra_vertices(1);
  const auto fresh = static_cast<Vertex>(t.order());
  neighbours.for_each([&](Vertex v) { out.add_edge(fresh, v); });
  return out;
}

inline SeedRecipe from_labels(Graph seed, Graph target, std::vector<std::vector<Vertex>> labels,
                              Step step) {
  SeedRecipe r;
  const auto n = seed.order();
  r.seed = std::move(seed);
  r.target = std::move(target);
  for (auto& l : labels) r.labels.emplace_back(n, l);
  r.steps.push_back(std::move(step));
  return certify_labels(std::move(r));
}

// Deletion without certification; labels are carried exactly.
inline void delete_unchecked(SeedRecipe& r, Vertex x) {
  const auto n0 = static_cast<Vertex>(r.seed.order());
  const VertexSet kept = r.labels[x];
  grow_seed(r, 1);
  const auto bound = kept.resized(r.seed.order());
  for (Vertex v = 0; v < n0; ++v)
    if (!bound.contains(v)) r.seed.add_edge(n0, v);
  r.target = remove_vertex(r.target, x);
  r.labels.erase(r.labels.begin() + x);
  r.steps.push_back({"deletion", {{"target_vertex", x}}, {{"z", {n0}}}});
}

}  // namespace detail

// ----------------------------------------------------------------------------
// Complete graphs, hypercubes, cycles and the house.

SeedRecipe seed_cartesian(SeedRecipe r1, SeedRecipe r2);

// Seeds: K_n for K_n; nK2 for Q_n; K3, 2K2, C5, K2xK3 for C3..C6; for k >= 7
// the circulant in which v_i ~ v_j iff j is not within 2 of i (mod k); and
// the triangle {c,d,e} with tail a-b-c (a..e = 0..4) for the house. Targets
// are the family graphs of families.hpp.
inline SeedRecipe seed_basic(const BasicFamily& f) {
  using detail::from_labels;
  if (auto c = std::get_if<Complete>(&f)) {
    if (c->n < 1) throw ParameterError("complete graph needs n >= 1");
    std::vector<std::vector<Vertex>> labels;
    for (Vertex v = 0; v < c->n; ++v) labels.push_back({v});
    return from_labels(family::complete(c->n), family::complete(c->n), labels,
                       {"complete-graph", {{"n", c->n}}, {}});
  }
  if (auto h = std::get_if<Hypercube>(&f)) {
    if (h->n < 1) throw ParameterError("hypercube needs n >= 1");
    SeedRecipe k2 = seed_basic(Complete{2});
    SeedRecipe r = k2;
    for (int i = 1; i < h->n; ++i) r = seed_cartesian(r, k2);
    r.steps.push_back({"hypercube", {{"n", h->n}}, {}});
    return r;
  }
  if (auto c = std::get_if<Cycle>(&f)) {
    const int k = c->k;
    if (k < 3) throw ParameterError("cycle needs k >= 3");
    Step step{"cycle", {{"k", k}}, {}};
    switch (k) {
      case 3:
        return from_labels(family::complete(3), family::cycle(3), {{0}, {1}, {2}}, step);
      case 4:
        return from_labels(family::matching(2), family::cycle(4), {{0, 2}, {0, 3}, {1, 3}, {1, 2}},
                           step);
      case 5:
        // Vertex x_{i+1} of the figure is seed vertex i.
        return from_labels(family::cycle(5), family::cycle(5),
                           {{0, 3}, {0, 2}, {2, 4}, {1, 4}, {1, 3}}, step);
      case 6:
        // x_j = j and y_j = 3 + j in K2 x K3; {x_i, y_j} is an i-set iff i != j.
        return from_labels(cartesian_product(family::complete(2), family::complete(3)),
                           family::cycle(6), {{0, 4}, {0, 5}, {1, 5}, {1, 3}, {2, 3}, {2, 4}},
                           step);
      default: {
        std::vector<std::vector<Vertex>> labels;
        for (Vertex i = 0; i < k; ++i) {
          std::vector<Vertex> s{i, (i + 1) % k, (i + 2) % k};
          std::sort(s.begin(), s.end());
          labels.push_back(s);
        }
        return from_labels(family::far_circulant(k), family::cycle(k), labels, step);
      }
    }
  }
  Graph seed(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  return from_labels(seed, family::house(), {{0, 3}, {0, 4}, {1, 4}, {1, 3}, {0, 2}},
                     {"house", {}, {}});
}

// ----------------------------------------------------------------------------
// Inflation, K_{1,3} attachment, epn augmentation.

// Adds k - i(seed) isolated vertices to the seed; the target is unchanged.
inline SeedRecipe inflate(SeedRecipe r, std::size_t k) {
  r = detail::checked_input(std::move(r));
  const auto i = r.i_number();
  if (k < i)
    throw ArgumentError("inflate: k = " + std::to_string(k) + " is below i(seed) = " +
                        std::to_string(i));
  if (k == i) return r;
  const auto n0 = static_cast<Vertex>(r.seed.order());
  detail::grow_seed(r, k - i);
  const auto added = detail::range(n0, static_cast<Vertex>(r.seed.order()));
  for (auto& l : r.labels)
    for (Vertex v : added) l.insert(v);
  r.steps.push_back({"inflation", {{"k", static_cast<long long>(k)}}, {{"isolates", added}}});
  return certify_labels(std::move(r));
}

// Attaches a K_{1,3} (centre x, leaves y1..y3, appended in that order) by the
// edge v-y1. x joins every i-set, so i grows by one and the target is
// unchanged.
inline SeedRecipe attach_k13(SeedRecipe r, Vertex v) {
  r = detail::checked_input(std::move(r));
  if (!r.seed.valid(v)) throw ArgumentError("attach_k13: seed vertex out of range");
  const auto x = static_cast<Vertex>(r.seed.order());
  detail::grow_seed(r, 4);
  for (Vertex y = x + 1; y <= x + 3; ++y) r.seed.add_edge(x, y);
  r.seed.add_edge(v, x + 1);
  for (auto& l : r.labels) l.insert(x);
  r.steps.push_back(
      {"k13-attachment", {{"seed_vertex", v}}, {{"x", {x}}, {"y", {x + 1, x + 2, x + 3}}}});
  return certify_labels(std::move(r));
}

struct EpnNormalization {
  Graph graph;
  std::vector<GadgetRecord> gadgets;  // one {a, b} pair per repaired (i-set, vertex)
};

// For each i-set S of g (catalog order) and each v in S whose external
// private neighbourhood is empty, joins two new vertices a, b to every vertex
// of N[v]. The i-sets are unchanged and afterwards every epn(v, S) is
// nonempty.
inline EpnNormalization epn_normalize_detailed(const Graph& g) {
  const auto catalog = enumerate_isets(g);
  EpnNormalization out{g, {}};
  for (const auto& s0 : catalog.isets) {
    for (Vertex v : s0.members()) {
      const auto s = s0.resized(out.graph.order());
      if (!private_neighborhood(out.graph, s, v).epn.empty()) continue;
      const auto closed = out.graph.closed_neighborhood(v);
      const auto a = static_cast<Vertex>(out.graph.order());
      out.graph = out.graph.with_extra_vertices(2);
      closed.for_each([&](Vertex u) {
        out.graph.add_edge(a, u);
        out.graph.add_edge(a + 1, u);
      });
      out.gadgets.push_back({"epn-pair:" + std::to_string(v), {a, a + 1}});
    }
  }
  const auto after = enumerate_isets(out.graph);
  bool same = after.isets.size() == catalog.isets.size();
  for (std::size_t j = 0; same && j < after.isets.size(); ++j)
    same = after.isets[j] == catalog.isets[j].resized(out.graph.order());
  if (!same) throw CertificationError("epn_normalize changed the i-set catalog");
  return out;
}

inline Graph epn_normalize(const Graph& g) { return epn_normalize_detailed(g).graph; }

inline SeedRecipe epn_normalize(SeedRecipe r) {
  r = detail::checked_input(std::move(r));
  auto norm = epn_normalize_detailed(r.seed);
  if (norm.gadgets.empty()) return r;
  detail::grow_seed(r, norm.graph.order() - r.seed.order());
  r.seed = std::move(norm.graph);
  r.steps.push_back({"epn-augmentation", {}, std::move(norm.gadgets)});
  return certify_labels(std::move(r));
}

// ----------------------------------------------------------------------------
// Isolated and pendant target vertices, forests.

// New isolated target vertex |V(H)|. Seed: G v W with W independent of size
// i(G); when i(G) = 1 an isolated vertex is first added to G.
inline SeedRecipe add_isolated_to_target(SeedRecipe r) {
  r = detail::checked_input(std::move(r));
  Step step{"isolated-vertex", {}, {}};
  if (r.i_number() == 1) {
    const auto k1 = static_cast<Vertex>(r.seed.order());
    detail::grow_seed(r, 1);
    for (auto& l : r.labels) l.insert(k1);
    step.added.push_back({"k1", {k1}});
  }
  const auto k = r.i_number();
  const auto n0 = static_cast<Vertex>(r.seed.order());
  r.seed = join(r.seed, Graph(k));
  for (auto& l : r.labels) l = l.resized(r.seed.order());
  const auto w = detail::range(n0, static_cast<Vertex>(r.seed.order()));
  r.labels.emplace_back(r.seed.order(), w);
  r.target = r.target.with_extra_vertices(1);
  step.added.push_back({"W", w});
  r.steps.push_back(std::move(step));
  r.certificate.reset();
  return certify_labels(std::move(r));
}

// New target vertex |V(H)| pendant at w. After epn augmentation, x_i is
// attached to the i-th vertex of the i-set W of w, every x_i is joined to y,
// and z hangs off y (appended as x_1..x_k, y, z). The new target vertex is
// W + {z}; its neighbour w becomes W + {y}.
inline SeedRecipe add_pendant_to_target(SeedRecipe r, Vertex w) {
  r = detail::checked_input(std::move(r));
  detail::require_target_vertex(r, w);
  r = epn_normalize(std::move(r));
  const auto stem = r.label(w).members();
  const auto k = static_cast<Vertex>(stem.size());
  const auto n0 = static_cast<Vertex>(r.seed.order());
  detail::grow_seed(r, static_cast<std::size_t>(k) + 2);
  const Vertex y = n0 + k;
  const Vertex z = y + 1;
  for (Vertex i = 0; i < k; ++i) {
    r.seed.add_edge(stem[i], n0 + i);
    r.seed.add_edge(n0 + i, y);
  }
  r.seed.add_edge(y, z);
  auto leaf_label = r.labels[w];
  leaf_label.insert(z);
  for (auto& l : r.labels) l.insert(y);
  r.labels.push_back(leaf_label);
  VertexSet stem_set(r.target.order());
  stem_set.insert(w);
  r.target = detail::add_target_vertex(r.target, stem_set);
  r.steps.push_back({"pendant-vertex",
                     {{"target_vertex", w}},
                     {{"x", detail::range(n0, y)}, {"y", {y}}, {"z", {z}}}});
  return certify_labels(std::move(r));
}

// Target equal to the forest f. Built from a K1 seed for the smallest vertex
// of the first tree, one isolated vertex per further tree root (smallest
// vertex of each component), then one pendant per remaining vertex in BFS
// order from the roots.
inline SeedRecipe seed_forest(const Graph& f) {
  if (f.order() == 0) throw EmptyGraphError();
  if (!is_forest(f)) throw ArgumentError("seed_forest: input has a cycle");
  const auto comps = connected_components(f);
  std::vector<Vertex> order;
  std::vector<Vertex> pos(f.order(), -1);
  SeedRecipe r = seed_basic(Complete{1});
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c > 0) r = add_isolated_to_target(std::move(r));
    pos[comps[c][0]] = static_cast<Vertex>(order.size());
    order.push_back(comps[c][0]);
  }
  for (const auto& comp : comps) {
    std::vector<Vertex> queue{comp[0]};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex u = queue[qi];
      f.neighbors(u).for_each([&](Vertex v) {
        if (pos[v] != -1) return;
        r = add_pendant_to_target(std::move(r), pos[u]);
        pos[v] = static_cast<Vertex>(order.size());
        order.push_back(v);
        queue.push_back(v);
      });
    }
  }
  r = relabel_target(std::move(r), order);
  r.steps.push_back({"forest", {{"target", static_cast<long long>(f.order())}}, {}});
  if (!(r.target == f)) throw CertificationError("seed_forest: target does not match the forest");
  return r;
}

// ----------------------------------------------------------------------------
// Combining recipes.

// Seed G1 u G2; target H1 x H2 with (a, b) numbered a * |V(H2)| + b.
inline SeedRecipe seed_cartesian(SeedRecipe r1, SeedRecipe r2) {
  r1 = detail::checked_input(std::move(r1));
  r2 = detail::checked_input(std::move(r2));
  SeedRecipe r;
  r.seed = disjoint_union(r1.seed, r2.seed);
  r.target = cartesian_product(r1.target, r2.target);
  const auto n = r.seed.order();
  const auto off = static_cast<Vertex>(r1.seed.order());
  for (const auto& a : r1.labels)
    for (const auto& b : r2.labels) r.labels.push_back(a.resized(n) | b.shifted(off, n));
  r.steps = r1.steps;
  r.steps.insert(r.steps.end(), r2.steps.begin(), r2.steps.end());
  r.steps.push_back({"cartesian-product",
                     {},
                     {{"second-seed", detail::range(off, static_cast<Vertex>(n))}}});
  return certify_labels(std::move(r));
}

// Both seeds inflated to a common i >= 2, then joined; the target is
// H1 u H2 with H2's vertices after H1's.
inline SeedRecipe seed_union(SeedRecipe r1, SeedRecipe r2) {
  r1 = detail::checked_input(std::move(r1));
  r2 = detail::checked_input(std::move(r2));
  const auto k = std::max({r1.i_number(), r2.i_number(), std::size_t{2}});
  r1 = inflate(std::move(r1), k);
  r2 = inflate(std::move(r2), k);
  SeedRecipe r;
  r.seed = join(r1.seed, r2.seed);
  r.target = disjoint_union(r1.target, r2.target);
  const auto n = r.seed.order();
  const auto off = static_cast<Vertex>(r1.seed.order());
  for (const auto& a : r1.labels) r.labels.push_back(a.resized(n));
  for (const auto& b : r2.labels) r.labels.push_back(b.shifted(off, n));
  r.steps = r1.steps;
  r.steps.insert(r.steps.end(), r2.steps.begin(), r2.steps.end());
  r.steps.push_back({"disjoint-union",
                     {{"k", static_cast<long long>(k)}},
                     {{"second-seed", detail::range(off, static_cast<Vertex>(n))}}});
  return certify_labels(std::move(r));
}

// Removes target vertex x (higher target vertices shift down by one). Seed:
// a new vertex z adjacent to every seed vertex outside the i-set of x.
inline SeedRecipe delete_vertex_from_target(SeedRecipe r, Vertex x) {
  r = detail::checked_input(std::move(r));
  if (r.target.order() < 2) throw ArgumentError("delete_vertex_from_target: target is trivial");
  detail::require_target_vertex(r, x);
  detail::delete_unchecked(r, x);
  return certify_labels(std::move(r));
}

// Adds target vertex |V(H)| adjacent to the maximal clique `clique`. The seed
// is inflated to i >= 2 if needed; Z is the common part of the clique's
// i-sets and a new vertex w is joined to every seed vertex outside Z. A
// one-vertex clique (isolated target vertex) is handled as a pendant.
inline SeedRecipe max_clique_replace(SeedRecipe r, const VertexSet& clique) {
  r = detail::checked_input(std::move(r));
  if (clique.universe() != r.target.order())
    throw ArgumentError("max_clique_replace: clique bound to a different graph");
  if (!is_maximal_clique(r.target, clique))
    throw ArgumentError("max_clique_replace: not a maximal clique of the target");
  if (clique.size() == 1) return add_pendant_to_target(std::move(r), *clique.first());
  if (r.i_number() < 2) r = inflate(std::move(r), 2);
  VertexSet common = VertexSet::full(r.seed.order());
  clique.for_each([&](Vertex t) { common &= r.labels[t]; });
  const auto w = static_cast<Vertex>(r.seed.order());
  detail::grow_seed(r, 1);
  const auto z = common.resized(r.seed.order());
  for (Vertex v = 0; v < w; ++v)
    if (!z.contains(v)) r.seed.add_edge(w, v);
  auto apex = z;
  apex.insert(w);
  r.labels.push_back(apex);
  r.target = detail::add_target_vertex(r.target, clique);
  r.steps.push_back(
      {"max-clique-replacement", {{"clique", clique.members()}}, {{"w", {w}}, {"Z", z.members()}}});
  return certify_labels(std::move(r));
}

// One-point union: x of H1 and y of H2 become one vertex. Target numbering:
// H1's vertices keep their ids (x is the merged vertex), then H2's vertices
// other than y in order. Seed: both seeds inflated to a common i >= 2, their
// disjoint union (i-graph H1 x H2), then one deletion per product vertex
// outside H1 x {y} u {x} x H2.
inline SeedRecipe identify_vertices_target(SeedRecipe r1, Vertex x, SeedRecipe r2, Vertex y) {
  r1 = detail::checked_input(std::move(r1));
  r2 = detail::checked_input(std::move(r2));
  detail::require_target_vertex(r1, x);
  detail::require_target_vertex(r2, y);
  const auto n1 = static_cast<Vertex>(r1.target.order());
  const auto n2 = static_cast<Vertex>(r2.target.order());
  const auto k = std::max({r1.i_number(), r2.i_number(), std::size_t{2}});
  SeedRecipe r = seed_cartesian(inflate(std::move(r1), k), inflate(std::move(r2), k));
  for (Vertex p = n1 * n2 - 1; p >= 0; --p) {
    const Vertex a = p / n2, b = p % n2;
    if (b != y && a != x) detail::delete_unchecked(r, p);
  }
  // Survivors in ascending product order.
  std::vector<Vertex> perm;
  for (Vertex p = 0; p < n1 * n2; ++p) {
    const Vertex a = p / n2, b = p % n2;
    if (b == y)
      perm.push_back(a);
    else if (a == x)
      perm.push_back(n1 + (b < y ? b : b - 1));
  }
  r.certificate.reset();
  r = relabel_target(std::move(r), perm);
  r.steps.push_back({"vertex-identification", {{"x", x}, {"y", y}}, {}});
  return certify_labels(std::move(r));
}

// H1 and H2 joined by the edge x - (|V(H1)| + y); H2's vertex b becomes
// |V(H1)| + b. Built by identifying x with one end of a K2 and the other end
// with y.
inline SeedRecipe bridge_targets(SeedRecipe r1, Vertex x, SeedRecipe r2, Vertex y) {
  r1 = detail::checked_input(std::move(r1));
  r2 = detail::checked_input(std::move(r2));
  detail::require_target_vertex(r1, x);
  detail::require_target_vertex(r2, y);
  const auto n1 = static_cast<Vertex>(r1.target.order());
  const auto n2 = static_cast<Vertex>(r2.target.order());
  SeedRecipe r = identify_vertices_target(std::move(r1), x, seed_basic(Complete{2}), 0);
  r = identify_vertices_target(std::move(r), n1, std::move(r2), y);
  std::vector<Vertex> perm(static_cast<std::size_t>(n1 + n2));
  for (Vertex v = 0; v < n1; ++v) perm[v] = v;
  perm[n1] = n1 + y;
  for (Vertex b = 0, rank = 0; b < n2; ++b)
    if (b != y) perm[n1 + 1 + rank++] = n1 + b;
  r = relabel_target(std::move(r), perm);
  r.steps.push_back({"bridge", {{"x", x}, {"y", y}}, {}});
  return r;
}

// As bridge_targets, with the bridge grown into a K_m whose extra m - 2
// vertices are appended after H2's.
inline SeedRecipe clique_bridge_targets(SeedRecipe r1, Vertex x, SeedRecipe r2, Vertex y, int m) {
  if (m < 2) throw ArgumentError("clique_bridge_targets: m must be at least 2");
  const auto n1 = static_cast<Vertex>(r1.target.order());
  SeedRecipe r = bridge_targets(std::move(r1), x, std::move(r2), y);
  std::vector<Vertex> clique{x, n1 + y};
  for (int i = 2; i < m; ++i) {
    const auto fresh = static_cast<Vertex>(r.target.order());
    r = max_clique_replace(std::move(r), VertexSet(r.target.order(), clique));
    clique.push_back(fresh);
  }
  if (m > 2) r.steps.push_back({"clique-bridge", {{"m", m}}, {}});
  return r;
}

// Target H - uv for a bridge uv; numbering is unchanged. The two sides are
// cut out with deletions and recombined as a disjoint union.
inline SeedRecipe delete_bridge_from_target(SeedRecipe r, Vertex u, Vertex v) {
  r = detail::checked_input(std::move(r));
  detail::require_target_vertex(r, u);
  detail::require_target_vertex(r, v);
  if (!is_bridge(r.target, u, v)) throw ArgumentError("delete_bridge_from_target: not a bridge");
  Graph cut = r.target;
  cut.remove_edge(u, v);
  std::vector<Vertex> side;
  for (const auto& c : connected_components(cut))
    if (std::binary_search(c.begin(), c.end(), v)) side = c;
  const auto n = static_cast<Vertex>(r.target.order());
  auto in_side = [&](Vertex t) { return std::binary_search(side.begin(), side.end(), t); };

  SeedRecipe rest = r, part = r;
  std::vector<Vertex> rest_ids, part_ids;
  for (Vertex t = n - 1; t >= 0; --t) {
    if (in_side(t))
      detail::delete_unchecked(rest, t);
    else
      detail::delete_unchecked(part, t);
  }
  for (Vertex t = 0; t < n; ++t) (in_side(t) ? part_ids : rest_ids).push_back(t);
  rest = certify_labels(std::move(rest));
  part = certify_labels(std::move(part));
  SeedRecipe out = seed_union(std::move(rest), std::move(part));
  std::vector<Vertex> perm = rest_ids;
  perm.insert(perm.end(), part_ids.begin(), part_ids.end());
  out = relabel_target(std::move(out), perm);
  out.steps.push_back({"bridge-deletion", {{"u", u}, {"v", v}}, {}});
  if (!(out.target == cut)) throw CertificationError("bridge deletion produced the wrong target");
  return out;
}

// ----------------------------------------------------------------------------
// Block-structured targets.

namespace detail {

// Recipe whose target is exactly `block` (an induced block, local numbering),
// obtained by relabelling a family recipe.
inline SeedRecipe relabel_onto(SeedRecipe r, const Graph& block) {
  auto iso = find_isomorphism(r.target, block);
  if (!iso) throw ArgumentError("block is not isomorphic to the family target");
  return relabel_target(std::move(r), *iso);
}

using BlockRealizer = std::function<SeedRecipe(const Graph&)>;

// Realises a connected graph block by block: the first block's recipe, then
// every block sharing a cut vertex with what is already built, glued on by
// vertex identification. The target is relabelled to h's numbering.
inline SeedRecipe assemble_blocks(const Graph& h, const BlockRealizer& realize_block) {
  const auto blocks = block_decomposition(h).blocks;
  std::vector<Vertex> pos(h.order(), -1);
  std::vector<int> used(blocks.size(), 0);
  auto local = [&](std::size_t b) {
    return induced_subgraph(h, VertexSet(h.order(), blocks[b])).graph;
  };
  SeedRecipe r = realize_block(local(0));
  for (std::size_t i = 0; i < blocks[0].size(); ++i) pos[blocks[0][i]] = static_cast<Vertex>(i);
  used[0] = 1;
  for (std::size_t done = 1; done < blocks.size(); ++done) {
    std::size_t b = 0;
    Vertex shared = -1;
    for (b = 0; b < blocks.size(); ++b) {
      if (used[b]) continue;
      auto it = std::find_if(blocks[b].begin(), blocks[b].end(), [&](Vertex v) { return pos[v] != -1; });
      if (it != blocks[b].end()) {
        shared = *it;
        break;
      }
    }
    if (shared == -1) throw ArgumentError("assemble_blocks: graph is not connected");
    const auto& members = blocks[b];
    const auto local_shared =
        static_cast<Vertex>(std::find(members.begin(), members.end(), shared) - members.begin());
    const auto n1 = static_cast<Vertex>(r.target.order());
    r = identify_vertices_target(std::move(r), pos[shared], realize_block(local(b)), local_shared);
    for (Vertex i = 0, rank = 0; i < static_cast<Vertex>(members.size()); ++i)
      if (i != local_shared) pos[members[i]] = n1 + rank++;
    used[b] = 1;
  }
  std::vector<Vertex> perm(h.order());
  for (Vertex v = 0; v < static_cast<Vertex>(h.order()); ++v) perm[pos[v]] = v;
  return relabel_target(std::move(r), perm);
}

// Realises every component with `connected` and combines them with
// seed_union; the target is h itself.
inline SeedRecipe assemble_components(const Graph& h,
                                      const std::function<SeedRecipe(const Graph&)>& connected) {
  if (h.order() == 0) throw EmptyGraphError();
  std::vector<Vertex> order;
  SeedRecipe r;
  bool first = true;
  for (const auto& comp : connected_components(h)) {
    auto sub = induced_subgraph(h, VertexSet(h.order(), comp)).graph;
    SeedRecipe part = connected(sub);
    r = first ? std::move(part) : seed_union(std::move(r), std::move(part));
    first = false;
    order.insert(order.end(), comp.begin(), comp.end());
  }
  r = relabel_target(std::move(r), order);
  if (!(r.target == h)) throw CertificationError("assembled target does not match the input");
  return r;
}

// Clique, cycle and house blocks.
inline SeedRecipe realize_known_block(const Graph& block) {
  const auto n = static_cast<int>(block.order());
  if (is_clique(block, block.vertices())) return relabel_onto(seed_basic(Complete{n}), block);
  if (n >= 3 && block.size() == block.order() && connected_components(block).size() == 1)
    return relabel_onto(seed_basic(Cycle{n}), block);
  if (isomorphic(block, family::house())) return relabel_onto(seed_basic(House{}), block);
  throw ArgumentError("no known seed for a block on " + std::to_string(n) + " vertices");
}

inline SeedRecipe realize_cactus_block(const Graph& block) {
  if (block.order() <= 2) return realize_known_block(block);
  auto order = cycle_order(block);
  return relabel_target(seed_basic(Cycle{static_cast<int>(block.order())}), [&] {
    std::vector<Vertex> perm(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) perm[j] = order[j];
    return perm;
  }());
}

}  // namespace detail

// Block graph construction: one copy A_i of every maximal clique (blocks in
// lexicographic order, vertices in block order), then for every cut vertex
// (ascending) and every pair of its copies w_i, w_j (i < j), three new
// vertices adjacent to both. i(seed) equals the number of blocks. Disconnected
// inputs are built per component and combined with seed_union. Target = h.
inline SeedRecipe seed_block_graph(const Graph& h) {
  if (h.order() == 0) throw EmptyGraphError();
  if (!is_block_graph(h)) {
    const bool diamond = find_induced_copy(h, family::theta(1, 2, 2)).has_value();
    throw ArgumentError(std::string("seed_block_graph: not a block graph") +
                        (diamond ? " (contains an induced diamond)" : ""));
  }
  auto connected = [](const Graph& g) {
    const auto dec = block_decomposition(g);
    std::vector<std::vector<Vertex>> copy_of(g.order());
    Graph seed;
    std::vector<GadgetRecord> added;
    for (const auto& b : dec.blocks) {
      const auto off = static_cast<Vertex>(seed.order());
      seed = disjoint_union(seed, family::complete(static_cast<int>(b.size())));
      for (std::size_t i = 0; i < b.size(); ++i) copy_of[b[i]].push_back(off + static_cast<Vertex>(i));
      added.push_back({"clique-copy", detail::range(off, static_cast<Vertex>(seed.order()))});
    }
    for (Vertex c : dec.cut_vertices) {
      const auto& w = copy_of[c];
      const auto off = static_cast<Vertex>(seed.order());
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
          for (int p = 0; p < 3; ++p) {
            const auto mid = static_cast<Vertex>(seed.order());
            seed = seed.with_extra_vertices(1);
            seed.add_edge(mid, w[i]);
            seed.add_edge(mid, w[j]);
          }
      added.push_back({"path-midpoints:" + std::to_string(c),
                       detail::range(off, static_cast<Vertex>(seed.order()))});
    }
    SeedRecipe r;
    r.seed = std::move(seed);
    r.target = g;
    r.steps.push_back({"block-graph",
                       {{"blocks", static_cast<long long>(dec.blocks.size())}},
                       std::move(added)});
    return certify_by_search(std::move(r));
  };
  return detail::assemble_components(h, connected);
}

// Any graph whose blocks are cliques, cycles or houses, glued at cut
// vertices by vertex identification and across components by disjoint union.
inline SeedRecipe seed_by_blocks(const Graph& h) {
  return detail::assemble_components(h, [](const Graph& g) {
    return detail::assemble_blocks(g, detail::realize_known_block);
  });
}

inline SeedRecipe seed_cactus(const Graph& h) {
  if (h.order() == 0) throw EmptyGraphError();
  if (!is_cactus(h)) throw ArgumentError("seed_cactus: some block is neither a cycle nor an edge");
  auto r = detail::assemble_components(
      h, [](const Graph& g) { return detail::assemble_blocks(g, detail::realize_cactus_block); });
  r.steps.push_back({"cactus", {}, {}});
  return r;
}

inline SeedRecipe seed_unicyclic(const Graph& h) {
  if (h.order() == 0) throw EmptyGraphError();
  if (!is_unicyclic(h)) throw ArgumentError("seed_unicyclic: graph does not have exactly one cycle");
  auto r = detail::assemble_components(
      h, [](const Graph& g) { return detail::assemble_blocks(g, detail::realize_cactus_block); });
  r.steps.push_back({"unicyclic", {}, {}});
  return r;
}

}  // namespace islide
