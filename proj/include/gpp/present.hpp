#pragma once

#include <string>
#include <vector>

#include "gpp/family.hpp"
#include "gpp/scomplex.hpp"
#include "gpp/smith.hpp"

namespace gpp {

/// Finite presentation with generators tagged by vertex. Relator words are
/// sequences of signed 1-based generator indices (+i for gens[i-1], -i for
/// its inverse).
struct Presentation {
  struct Gen {
    std::string name;
    int vertex = -1;
  };
  std::vector<Gen> gens;
  std::vector<std::vector<int>> vertex_relators;
  std::vector<std::vector<int>> commutator_relators;

  std::vector<std::vector<int>> all_relators() const;
  std::string relator_str(const std::vector<int>& w) const;
  /// One relator per line, ^ for powers, [x,y] for commutators.
  std::string text() const;
  std::vector<std::vector<BigInt>> relation_matrix() const;
  AbelianInvariants abelianization() const;
};

/// The presentation of the graph product of pairs: vertex-group relators
/// (from Cayley-graph cycles for finite groups, standard ones for the
/// presets) plus commutators between generator sets of adjacent vertices and
/// between every generator and every foreign subgroup generator.
Presentation build_presentation(const PairFamily& fam);

/// Presentation of the fundamental group of a connected complex from a
/// spanning tree of its 1-skeleton: generators are the non-tree edges,
/// relators the boundaries of the 2-simplices.
Presentation pi1_presentation(const SimComplex& complex, int base_vertex);

}  // namespace gpp
