#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpp/building.hpp"
#include "gpp/words.hpp"

namespace gpp {

/// Subgroup selection for one vertex: generators for a finite vertex group,
/// a modulus for Z, a dihedral subgroup for the infinite dihedral preset.
struct HSpec {
  std::vector<Perm> gens;              // finite case
  long long z_modulus = 1;             // subgroup (modulus)Z of Z
  DihSubgroup dih = DihSubgroup::whole();

  static HSpec whole_group(const VertexPair& p);
  static HSpec trivial_subgroup();  // finite vertices only
};

/// Two families over the same graph, per-vertex subgroups on both sides, and
/// the per-vertex equivariant isomorphisms between the subgroup actions on
/// the coset spaces. prepare() finds and validates the isomorphisms; each
/// failure names the vertex and the violated hypothesis.
class CommInstance {
 public:
  CommInstance(PairFamily fam, PairFamily fam_star, std::vector<HSpec> h,
               std::vector<HSpec> h_star);

  void prepare(const Limits& lim = Limits::defaults());
  bool prepared() const { return prepared_; }

  const PairFamily& family() const { return fam_; }
  const PairFamily& family_star() const { return fam_star_; }
  int n() const { return fam_.n(); }
  bool all_finite() const { return fam_.all_finite() && fam_star_.all_finite(); }

  // per-vertex data, finite vertices only
  const Subgroup& h_subgroup(int v) const { return h_sub_[static_cast<std::size_t>(v)]; }
  const Subgroup& h_subgroup_star(int v) const { return h_sub_star_[static_cast<std::size_t>(v)]; }
  const ActionIso& iso(int v) const { return isos_[static_cast<std::size_t>(v)]; }
  /// Test hook: replace a vertex isomorphism without re-validation.
  void set_iso(int v, ActionIso iso) { isos_[static_cast<std::size_t>(v)] = std::move(iso); }

  long long index_of_h(int v) const;       // [G_v : H_v]
  long long index_of_h_star(int v) const;  // [G_v* : H_v*]

  bool h_contains(int v, const VElem& g) const;
  bool h_star_contains(int v, const VElem& g) const;
  /// psi_v on an element of H_v (finite vertices).
  Perm psi(int v, const Perm& h_elem) const;

  /// Left-coset transversal of H_v in G_v, identity first, canonical order.
  std::vector<VElem> h_transversal(int v) const;
  std::vector<VElem> h_transversal_star(int v) const;
  /// Canonical representative of g * H_v.
  VElem h_coset_rep(int v, const VElem& g) const;
  VElem h_coset_rep_star(int v, const VElem& g) const;

  const HSpec& h_spec(int v) const { return h_[static_cast<std::size_t>(v)]; }
  const HSpec& h_spec_star(int v) const { return h_star_[static_cast<std::size_t>(v)]; }

 private:
  PairFamily fam_, fam_star_;
  std::vector<HSpec> h_, h_star_;
  std::vector<Subgroup> h_sub_, h_sub_star_;  // finite vertices
  std::vector<ActionIso> isos_;
  bool prepared_ = false;
};

/// The shared finite-index subgroup: the preimage of the product of the H_v
/// under the projection to the direct product. Index is exact; the Schreier
/// generators come from the product transversal.
struct CommWitness {
  long long index = 1;       // [G : H] = prod [G_v : H_v]
  long long index_star = 1;  // [G* : H*]
  bool reduced_flag = false; // both sides act effectively, so the group-level
                             // isomorphism is determined by the action
  std::vector<GPElement> schreier;       // generators of H inside the family
  std::vector<GPElement> schreier_star;  // generators of H* inside the other family
};

CommWitness common_subgroup(CommInstance& inst, const Limits& lim = Limits::defaults());

/// Schreier generators of the preimage of prod(H_v) for one family alone.
std::vector<GPElement> preimage_schreier(const CommInstance& inst, bool starred,
                                         const Limits& lim);

struct EquivIsoReport {
  bool ok = false;
  std::string failure;
  int radius = 0;
  int margin_radius = 0;
  bool consistency_ok = true;
  std::size_t chambers_mapped = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  double skipped_fraction = 0.0;
  int first_violation_radius = -1;
  std::vector<std::pair<BVertex, BVertex>> vertex_map;  // radius-r portion
  std::vector<std::pair<GPElement, GPElement>> transported_gens;
};

/// Lift the per-vertex coset bijections to a type-preserving isomorphism of
/// the truncated developments, chamber by chamber from the base, and verify
/// equivariance under every Schreier generator on all radius-r vertices.
/// Buildings are built with a margin so generator translates stay inside.
EquivIsoReport equivariant_building_iso(CommInstance& inst, int radius,
                                        const Limits& lim = Limits::defaults());

struct BuildingIsoReport {
  bool ok = false;
  std::string failure;
  std::size_t verts_mapped = 0;
  std::size_t edges_checked = 0;
  std::vector<std::pair<BVertex, BVertex>> vertex_map;
};

/// Type-preserving isomorphism of truncated developments from matching coset
/// counts alone (identity point bijections); no group equivariance claimed.
BuildingIsoReport building_iso_only(const PairFamily& fam, const PairFamily& fam_star, int radius,
                                    const Limits& lim = Limits::defaults());

struct Cor561Report {
  bool ok = false;
  std::string failure;
  bool locally_finite = false;
  long long max_vertex_degree = 0;
  bool properly_discontinuous = false;
  long long max_stabilizer_order = 0;
  long long max_stabilizer_order_star = 0;
  long long common_index = 1;        // prod |G_v|
  long long common_index_star = 1;   // prod |G_v*|
  BuildingIsoReport buildings;
};

/// Locally finite isomorphic developments with properly discontinuous
/// cocompact actions, plus the trivial-subgroup common-subgroup bookkeeping.
Cor561Report cor561_scenario(const PairFamily& fam, const PairFamily& fam_star, int radius,
                             const Limits& lim = Limits::defaults());

}  // namespace gpp
