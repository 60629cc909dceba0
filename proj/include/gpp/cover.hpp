#pragma once

#include <string>
#include <vector>

#include "gpp/building.hpp"
#include "gpp/smith.hpp"
#include "gpp/words.hpp"

namespace gpp {

/// Desk-scale observables of the covering description of the group: the
/// product projection's kernel acts freely on the truncated development,
/// two independent abelianization computations agree, and sampled kernel
/// elements carry infinite-order certificates from the matrix engine.
struct CoverReport {
  bool ok = false;

  // (a) abelianization: presentation route vs direct vertex-group route
  AbelianInvariants presentation_ab;
  AbelianInvariants vertexwise_ab;
  bool abelianization_match = false;

  // (b) free action of the projection kernel on the truncated development
  std::size_t elements_enumerated = 0;
  std::size_t kernel_elements = 0;
  bool kernel_action_free = false;
  std::string fixed_example;

  // (c) infinite-order certificates for sampled kernel elements
  std::size_t torsion_certified = 0;
  bool torsion_check_ok = false;
  std::string torsion_failure;
  bool torsion_checked = false;  // false when the matrix engine is unavailable

  // kernel of the development action versus the product of the vertex cores
  bool action_kernel_matches_cores = true;
  std::size_t action_kernel_checks = 0;
};

CoverReport cover_checks(const PairFamily& fam, int radius, int word_length,
                         const Limits& lim = Limits::defaults());

/// Abelian invariants computed without the presentation: the direct sum of
/// the vertex groups' abelianizations (presets contribute a free factor for
/// Z and two order-2 factors for the infinite dihedral group).
AbelianInvariants vertexwise_abelianization(const PairFamily& fam);

/// Nonidentity elements of the projection kernel among products of at most
/// `word_length` alphabet letters.
std::vector<GPElement> kernel_sample(const PairFamily& fam, int word_length,
                                     const Limits& lim = Limits::defaults());

}  // namespace gpp
