#pragma once

#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace gpp {

/// Finite abstract simplicial complex with labeled vertices. Stores the full
/// inclusion-closed family of nonempty simplices as sorted vertex-index
/// vectors.
class SimComplex {
 public:
  SimComplex() = default;

  /// Close the given simplices downward; every listed vertex index must
  /// appear. Vertices not covered by any simplex are added as 0-simplices.
  static SimComplex from_maximal(std::vector<std::string> labels,
                                 const std::vector<std::vector<int>>& maximal);

  int n_vertices() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::set<std::vector<int>>& simplices() const { return simplices_; }
  bool has_simplex(std::vector<int> verts) const;

  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::array<int, 3>> triangles() const;
  std::vector<std::vector<int>> maximal_simplices() const;
  int dimension() const;
  long long euler_characteristic() const;
  bool adjacent(int v, int w) const;

  std::size_t count_of_dim(int d) const;

  std::string to_dot(const std::string& name = "K") const;

 private:
  std::vector<std::string> labels_;
  std::set<std::vector<int>> simplices_;
};

/// Realization of a finite poset: vertices are the poset elements, simplices
/// the chains (linearly ordered subsets). `less` must be a strict partial
/// order.
SimComplex order_complex(int n, const std::function<bool(int, int)>& less,
                         std::vector<std::string> labels);

/// True iff every clique of the 1-skeleton spans a simplex.
bool is_flag(const SimComplex& complex);

}  // namespace gpp
