#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpp/limits.hpp"
#include "gpp/perm.hpp"

namespace gpp {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite permutation group on {0,...,degree-1}, elements enumerated by
/// closure. Immutable after construction; the element list is sorted by
/// image tuple, so element indices are canonical.
class FiniteGroup {
 public:
  static GroupPtr make(int degree, std::vector<Perm> generators, std::string label = "",
                       const Limits& lim = Limits::defaults());

  // Presets used by the CLI input format.
  static GroupPtr trivial();
  static GroupPtr cyclic(int n);
  static GroupPtr dihedral(int n);    // order 2n, natural action on n points
  static GroupPtr symmetric(int n);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  const std::string& label() const { return label_; }

  bool contains(const Perm& p) const;
  /// Index into elements(); throws if absent.
  int index_of(const Perm& p) const;
  const Perm& identity() const;

  /// Words over generators() realizing each element, from the enumeration BFS.
  /// word_for(i) is a list of generator indices whose product (left to right,
  /// applied as path extensions on the right) equals elements()[i].
  const std::vector<int>& word_for(int elem_index) const;

  /// Invariant factors d1 | d2 | ... of G/[G,G], entries > 1.
  std::vector<long long> abelian_invariants() const;

 private:
  FiniteGroup() = default;
  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;           // sorted
  std::vector<std::vector<int>> words_;  // parallel to elems_
  std::string label_;
};

/// Subgroup of a parent group, given by generators that must lie in the parent.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<Perm> generators, const Limits& lim = Limits::defaults());

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(const Perm& p) const;
  int index_of(const Perm& p) const;  // index into elements()

 private:
  GroupPtr parent_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;  // sorted
};

/// Left coset space G/A with canonical representatives (lexicographically
/// least permutation in each coset). The identity coset is point 0.
class CosetSpace {
 public:
  CosetSpace() = default;
  CosetSpace(GroupPtr parent, Subgroup sub);

  const GroupPtr& parent() const { return parent_; }
  const Subgroup& subgroup() const { return sub_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const Perm& rep(int point) const { return reps_[static_cast<std::size_t>(point)]; }
  const std::vector<Perm>& reps() const { return reps_; }

  /// Point index of the coset g*A.
  int coset_of(const Perm& g) const;
  /// Left action g.(rep(x)A) = (g rep(x))A.
  int act(const Perm& g, int point) const;
  /// Full action table row for a parent element (by parent element index).
  int act_by_index(int parent_elem, int point) const { return table_[static_cast<std::size_t>(parent_elem)][static_cast<std::size_t>(point)]; }

 private:
  GroupPtr parent_;
  Subgroup sub_;
  std::vector<Perm> reps_;
  std::vector<std::vector<int>> table_;  // |G| x |X|
};

/// Largest normal subgroup of G contained in A: the kernel of the action of
/// G on G/A, equivalently the intersection of all G-conjugates of A.
Subgroup core(const GroupPtr& g, const Subgroup& a);

/// A finite group acting on points 0..n-1: the restriction of a coset action
/// to a subgroup H of the parent.
struct FiniteAction {
  Subgroup group;               // H
  int points = 0;               // |X|
  std::vector<std::vector<int>> table;  // |H| x |X|, indexed by H element index

  static FiniteAction restrict_to(const Subgroup& h, const CosetSpace& x);
  int act(int h_elem, int point) const { return table[static_cast<std::size_t>(h_elem)][static_cast<std::size_t>(point)]; }
  /// Orbit sizes in increasing order.
  std::vector<int> orbit_sizes() const;
  bool is_free() const;
};

/// Equivariant isomorphism witness between two finite actions: a generator
/// map psi (by H-generator index to an element index of H*) together with a
/// point bijection phi. After a successful check, the full element map is
/// available.
struct ActionIso {
  std::vector<int> psi_gen_images;  // per generator of H: element index in H*
  std::vector<int> phi;             // point bijection X -> X*

  // Filled by check_action_iso on success.
  std::vector<int> psi_elem_map;    // per element index of H: element index of H*
};

struct ActionIsoReport {
  bool ok = false;
  std::string violation;  // empty when ok
};

/// Verify that (psi, phi) is an equivariant isomorphism between h_on_x and
/// hstar_on_xstar: psi extends to a group isomorphism and
/// phi(h.x) = psi(h).phi(x) for all generators h and points x.
ActionIsoReport check_action_iso(const FiniteAction& h_on_x, const FiniteAction& hstar_on_xstar,
                                 ActionIso& iso);

/// Backtracking search for an equivariant isomorphism. Point sets and group
/// orders are capped; returns nullopt when none exists.
std::optional<ActionIso> find_action_iso(const FiniteAction& h_on_x, const FiniteAction& hstar_on_xstar,
                                         const Limits& lim = Limits::defaults());

/// Try to extend generator image assignments to a homomorphism G -> target
/// defined on all of G. Returns the element map, or nullopt if the images are
/// inconsistent with the relations of G.
std::optional<std::vector<Perm>> extend_homomorphism(const FiniteGroup& g,
                                                     const std::vector<Perm>& gen_images);

}  // namespace gpp
