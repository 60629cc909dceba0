#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpp/presets.hpp"
#include "gpp/smith.hpp"

namespace gpp {

/// Square integer matrix with exact arbitrary-precision entries.
struct IMat {
  int n = 0;
  std::vector<BigInt> a;  // row-major

  static IMat identity(int n);
  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
  const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
  IMat operator*(const IMat& rhs) const;
  bool operator==(const IMat&) const = default;
  bool is_identity() const;
  IMat pow(long long k) const;  // k >= 0
  BigInt max_abs() const;
  std::string str() const;  // deterministic serialization
};

/// Coxeter matrix: symmetric, 1 on the diagonal, off-diagonal entries >= 2
/// or 0 (meaning infinity).
struct CoxeterMatrix {
  static constexpr int kInfinity = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;

  int n() const { return static_cast<int>(labels.size()); }
  int entry(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  void validate() const;
  bool is_right_angled() const;  // off-diagonal entries 2 or infinity
  /// Submatrix on a generator subset.
  CoxeterMatrix restricted(const std::vector<int>& gens) const;

  static CoxeterMatrix single(std::string label);                     // Z_2
  static CoxeterMatrix inf_dihedral(std::string s, std::string t);
  static CoxeterMatrix symmetric_group(int points, const std::string& prefix);  // type A_{points-1}
  static CoxeterMatrix dihedral(int p, std::string s, std::string t);  // I_2(p)
  /// Matrix as plain-text integer rows (infinity printed as 0).
  std::string text() const;
};

/// One (Coxeter group, parabolic subgroup) datum per vertex.
struct CoxeterPair {
  CoxeterMatrix w;
  std::vector<int> parabolic;  // generator indices of P inside w
};

class SimpleGraph;

/// The Coxeter matrix of the graph product of (group, parabolic) pairs:
/// blocks as given; cross entries 2 for edges, and otherwise 2 exactly when
/// one side is a parabolic generator of the other vertex, infinity else.
CoxeterMatrix coxeter_from_pairs(const SimpleGraph& graph, const std::vector<CoxeterPair>& pairs);

/// Exact reflection representation: sigma_s(e_t) = e_t - 2B(e_s,e_t) e_s
/// with B = -cos(pi/m); supported entries keep -2B integral (2, 3, infinity).
/// Construction verifies all defining relations exactly; infinite-order
/// products are certified by entry growth over 50 powers.
struct TitsRep {
  CoxeterMatrix matrix;
  std::vector<IMat> gen;

  IMat word_matrix(const std::vector<int>& word) const;  // 0-based generator indices
};

TitsRep tits_rep(const CoxeterMatrix& m);

/// Retraction of a Coxeter group onto a parabolic subgroup with its kernel
/// data. rho maps each generator to the identity (-1) or to a parabolic
/// generator; the parabolic generators are fixed.
struct Orthoparabolic {
  CoxeterMatrix w;
  std::vector<int> parabolic;
  std::vector<int> rho;  // per generator of w
  bool kernel_computed = false;
  std::vector<std::vector<int>> kernel_schreier;  // words over w's generators
  std::size_t parabolic_order = 0;                // when finite
};

/// Bounded search: images restricted to the identity or a single parabolic
/// generator. Relations are verified through the reflection representation
/// of the parabolic. Returns nullopt when no retraction exists in that range.
std::optional<Orthoparabolic> orthoparabolic_find(const CoxeterMatrix& w,
                                                  const std::vector<int>& parabolic);

/// Apply a retraction to a word (0-based generator indices).
std::vector<int> rho_apply(const Orthoparabolic& op, const std::vector<int>& word);

/// Index-2 subgroup of words of even length.
struct EvenSubgroup {
  std::vector<std::pair<int, int>> gens;  // products s_0 * s_j
};
EvenSubgroup even_subgroup(const CoxeterMatrix& m);

/// Index-n subgroups of an infinite right-angled Coxeter group, pulled back
/// through the retraction onto an infinite dihedral parabolic. The index is
/// verified by explicit coset enumeration in the dihedral preset.
struct DinftySubgroupData {
  int n = 1;
  int s_gen = -1, t_gen = -1;          // the chosen non-adjacent pair
  std::vector<std::vector<int>> subgroup_gens;  // words over w's generators
  DihSubgroup k;                        // the dihedral subgroup
  long long verified_index = 0;         // from coset enumeration
  std::vector<std::vector<int>> preimage_schreier;  // generators of the pullback
};

DinftySubgroupData dinfty_subgroups(const CoxeterMatrix& w, int n);

/// Membership in the pullback subgroup: retract the word into the dihedral
/// parabolic and test there.
bool dinfty_sub_contains(const CoxeterMatrix& w, const DinftySubgroupData& data,
                         const std::vector<int>& word);

}  // namespace gpp
