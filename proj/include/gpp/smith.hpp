#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gpp {

using BigInt = boost::multiprecision::cpp_int;

/// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form.
std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> m);

/// Structure of a finitely generated abelian group given by a relation
/// matrix (rows = relations, columns = generators).
struct AbelianInvariants {
  std::vector<long long> torsion;  // invariant factors > 1, ascending divisibility
  int free_rank = 0;

  bool operator==(const AbelianInvariants&) const = default;
  std::string str() const;
};

AbelianInvariants abelian_from_relations(const std::vector<std::vector<BigInt>>& m, int n_generators);

/// Canonical invariant factors of a direct sum given the factor lists of the
/// summands (each ascending divisibility, entries > 1).
std::vector<long long> merge_invariant_factors(const std::vector<std::vector<long long>>& summands);

}  // namespace gpp
