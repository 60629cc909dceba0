#pragma once

#include <string>
#include <vector>

#include "gpp/building.hpp"
#include "gpp/scomplex.hpp"
#include "gpp/words.hpp"

namespace gpp {

/// The complex of partial coset selections: a vertex picks at most one point
/// of each coset space X_v (encoded -1 = unselected); simplices are chains
/// under containment. Carries the componentwise action of the product of the
/// vertex groups.
class ChoiceComplex {
 public:
  std::vector<std::vector<int>> verts;  // sorted; entry[v] in {-1} u points(X_v)
  std::vector<std::pair<int, int>> edges;

  static ChoiceComplex build(const PairFamily& fam, const Limits& lim = Limits::defaults());

  int index_of(const std::vector<int>& y) const;  // -1 if absent
  static bool contained(const std::vector<int>& y, const std::vector<int>& z);

  /// Apply a product-group element (one vertex-group element per vertex).
  std::vector<int> act(const PairFamily& fam, const std::vector<VElem>& tuple,
                       const std::vector<int>& y) const;
  /// Apply a single vertex-group element at one vertex.
  std::vector<int> act_single(const PairFamily& fam, int v, const VElem& g,
                              const std::vector<int>& y) const;

  SimComplex to_complex(const PairFamily& fam) const;
  std::string vertex_str(const PairFamily& fam, const std::vector<int>& y) const;
};

/// Full subcomplex of the choice complex on selections whose unselected set
/// is a clique of the family's graph. Finite model of the quotient complex
/// the development covers; invariant under the product-group action.
struct DeltaComplex {
  ChoiceComplex cx;              // the ambient complex
  std::vector<int> vert_ids;     // sorted ids of vertices kept
  std::vector<std::pair<int, int>> edges;  // indices into vert_ids

  static DeltaComplex build(const PairFamily& fam, const Limits& lim = Limits::defaults());
  SimComplex to_complex(const PairFamily& fam) const;
  /// Verifies invariance under every vertex-group generator.
  bool verify_invariance(const PairFamily& fam) const;
};

/// The canonical vertex map from the complete-graph development to the
/// choice complex ([g,S] -> the coset choices of g outside S), with its
/// verification: well-definedness, bijectivity, adjacency preservation both
/// ways, equivariance under all generators, and compatibility with the
/// projections to types.
struct CoordinateIsoReport {
  bool ok = false;
  std::string failure;
  std::size_t verts_matched = 0;
  std::size_t edges_matched = 0;
  std::size_t equivariance_checks = 0;
  std::vector<int> building_to_choice;  // vertex map by building index
};

CoordinateIsoReport build_coordinate_iso(const PairFamily& complete_fam, const Building& dev,
                                         const ChoiceComplex& cx);

}  // namespace gpp
