#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gpp {

/// Element of the infinite dihedral group Z x| Z_2, acting on the line as
/// x -> shift + x (flip = 0) or x -> shift - x (flip = 1). With the standard
/// generators s: x -> -x and t: x -> -x-1 the product st is the unit
/// translation. Composition is right-to-left, matching permutations.
struct DihElem {
  long long shift = 0;
  int flip = 0;

  static DihElem identity() { return {0, 0}; }
  static DihElem s() { return {0, 1}; }
  static DihElem t() { return {-1, 1}; }
  static DihElem translation(long long n) { return {n, 0}; }

  DihElem operator*(const DihElem& rhs) const {
    return {shift + (flip ? -rhs.shift : rhs.shift), flip ^ rhs.flip};
  }
  DihElem inverse() const { return flip ? DihElem{shift, 1} : DihElem{-shift, 0}; }
  bool is_identity() const { return shift == 0 && flip == 0; }
  auto operator<=>(const DihElem&) const = default;

  std::string str() const;
  /// Express as a word in the generators s, t (values 0 and 1).
  std::vector<int> st_word() const;
};

DihElem dih_pow(DihElem base, long long n);

/// Finitely generated subgroup of the infinite dihedral group. Every such
/// subgroup is either trivial, a translation lattice dZ, a single reflection,
/// or dihedral: translations dZ plus reflections with shift congruent to
/// refl_shift mod d.
struct DihSubgroup {
  long long lattice = 0;      // d >= 0; 0 means no nontrivial translations
  bool has_reflections = false;
  long long refl_shift = 0;   // meaningful when has_reflections

  static DihSubgroup generated_by(const std::vector<DihElem>& gens);
  static DihSubgroup translations() { return {1, false, 0}; }
  static DihSubgroup whole() { return {1, true, 0}; }
  static DihSubgroup trivial() { return {0, false, 0}; }

  bool contains(const DihElem& g) const;
  /// Index in the full infinite dihedral group; 0 means infinite.
  long long index_in_whole() const;
  bool is_trivial() const { return lattice == 0 && !has_reflections; }
};

/// Left-coset enumeration of a finite-index subgroup of the infinite
/// dihedral group by BFS over {s, t}; exact, using the membership test.
/// Returns canonical coset representatives (identity first).
std::vector<DihElem> dih_coset_reps(const DihSubgroup& k);

/// Subgroup nZ of the integers.
struct ZSubgroup {
  long long modulus = 1;  // n >= 0; 0 = trivial subgroup
  bool contains(long long g) const { return modulus != 0 && g % modulus == 0; }
  long long index() const { return modulus; }  // 0 would be infinite
};

}  // namespace gpp
