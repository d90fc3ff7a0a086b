#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "islide/canonical.hpp"
#include "islide/errors.hpp"
#include "islide/graph.hpp"
#include "islide/igraph.hpp"

namespace islide {

using ParamValue = std::variant<long long, std::string, std::vector<Vertex>>;

// Seed vertices introduced by a step, with the role they play in it.
struct GadgetRecord {
  std::string role;
  std::vector<Vertex> vertices;
  friend bool operator==(const GadgetRecord&, const GadgetRecord&) = default;
};

struct Step {
  std::string result;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::vector<GadgetRecord> added;
  friend bool operator==(const Step&, const Step&) = default;
};

// A seed graph together with the target it realises.
//
// certificate[j] is the target vertex matched to i-set j of the seed (catalog
// order). labels[t] is the seed i-set matched to target vertex t; it is the
// inverse view of the certificate and is filled whenever a recipe is
// certified.
struct SeedRecipe {
  Graph seed;
  Graph target;
  std::vector<Step> steps;
  std::optional<std::vector<Vertex>> certificate;
  std::vector<VertexSet> labels;

  bool certified() const { return certificate.has_value() && labels.size() == target.order(); }
  std::size_t i_number() const { return labels.empty() ? 0 : labels.front().size(); }
  const VertexSet& label(Vertex t) const { return labels.at(static_cast<std::size_t>(t)); }
};

// True iff the recipe carries a certificate that is an isomorphism from
// ig(seed) onto the target.
inline bool verify(const SeedRecipe& r) {
  if (!r.certificate || r.seed.order() == 0) return false;
  const IGraph ig = build_igraph(r.seed);
  return is_isomorphism(ig.skeleton, r.target, *r.certificate);
}

// Certifies a draft whose labels were propagated by a construction: the
// labels must be exactly the i-sets of the seed, and matching them must carry
// the skeleton onto the target edge for edge.
inline SeedRecipe certify_labels(SeedRecipe r) {
  if (r.labels.size() != r.target.order())
    throw CertificationError("draft has " + std::to_string(r.labels.size()) + " labels for " +
                             std::to_string(r.target.order()) + " target vertices");
  const IGraph ig = build_igraph(r.seed);
  const auto m = ig.catalog.isets.size();
  if (m != r.target.order())
    throw CertificationError("seed has " + std::to_string(m) + " i-sets but target has " +
                             std::to_string(r.target.order()) + " vertices");
  std::vector<Vertex> cert(m, -1);
  for (std::size_t t = 0; t < r.labels.size(); ++t) {
    if (r.labels[t].universe() != r.seed.order())
      throw CertificationError("label bound to a different seed");
    const int j = ig.catalog.index_of(r.labels[t]);
    if (j < 0 || cert[j] != -1)
      throw CertificationError("label of target vertex " + std::to_string(t) +
                               " is not a distinct i-set of the seed");
    cert[j] = static_cast<Vertex>(t);
  }
  if (!is_isomorphism(ig.skeleton, r.target, cert))
    throw CertificationError("i-graph adjacency does not match the target");
  r.certificate = std::move(cert);
  return r;
}

// Certifies by searching for an isomorphism ig(seed) -> target; labels follow.
inline SeedRecipe certify_by_search(SeedRecipe r) {
  const IGraph ig = build_igraph(r.seed);
  auto iso = find_isomorphism(ig.skeleton, r.target);
  if (!iso) throw CertificationError("i-graph of the seed is not isomorphic to the target");
  r.labels.assign(r.target.order(), VertexSet());
  for (std::size_t j = 0; j < iso->size(); ++j) r.labels[(*iso)[j]] = ig.catalog.isets[j];
  r.certificate = std::move(*iso);
  return r;
}

// Rebuilds labels of a recipe that carries only a certificate (e.g. one read
// from JSON).
inline SeedRecipe restore_labels(SeedRecipe r) {
  if (!r.certificate) throw ArgumentError("recipe is not certified");
  const IGraph ig = build_igraph(r.seed);
  if (!is_isomorphism(ig.skeleton, r.target, *r.certificate))
    throw CertificationError("recipe certificate does not verify");
  r.labels.assign(r.target.order(), VertexSet());
  for (std::size_t j = 0; j < r.certificate->size(); ++j)
    r.labels[(*r.certificate)[j]] = ig.catalog.isets[j];
  return r;
}

// Same recipe with target vertex t renamed perm[t].
inline SeedRecipe relabel_target(SeedRecipe r, const std::vector<Vertex>& perm) {
  r.target = relabel(r.target, perm);
  std::vector<VertexSet> labels(r.labels.size());
  for (std::size_t t = 0; t < r.labels.size(); ++t) labels[perm[t]] = std::move(r.labels[t]);
  r.labels = std::move(labels);
  if (r.certificate)
    for (auto& t : *r.certificate) t = perm[t];
  return r;
}

}  // namespace islide
