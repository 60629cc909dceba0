#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpp {

/// Permutation of {0,...,n-1} in image form: p.img[i] is the image of i.
/// Products compose right-to-left, (p*q)(i) = p(q(i)), so that g.x := g(x)
/// is a left action.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // validated

  static Perm identity(int degree) { return Perm(degree); }
  /// Parse disjoint-cycle notation like "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  /// Total order on image tuples; used for canonical coset representatives.
  auto operator<=>(const Perm& rhs) const = default;

  const std::vector<int>& images() const { return img_; }
  std::string to_cycles() const;
  std::uint64_t hash() const;

 private:
  std::vector<int> img_;
};

}  // namespace gpp
