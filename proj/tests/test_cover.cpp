#include "doctest.h"
#include "gpp/cover.hpp"

using namespace gpp;

namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

}  // namespace

TEST_CASE("covering observables for the free product of two Z2") {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < 2; ++i) pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
  PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
  CoverReport rep = cover_checks(fam, 4, 4);
  CHECK(rep.ok);
  CHECK(rep.abelianization_match);
  CHECK(rep.presentation_ab == AbelianInvariants{{2, 2}, 0});
  CHECK(rep.kernel_elements >= 2);  // abab and baba
  CHECK(rep.kernel_action_free);
  CHECK(rep.torsion_checked);
  CHECK(rep.torsion_check_ok);
  CHECK(rep.torsion_certified == rep.kernel_elements);
  CHECK(rep.action_kernel_matches_cores);
}

TEST_CASE("complete-graph families have trivial projection kernel") {
  std::vector<VertexPair> pairs;
  pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
  pairs.push_back(VertexPair::finite(FiniteGroup::symmetric(3), {}));
  PairFamily fam(SimpleGraph::complete(labels(2)), std::move(pairs));
  CoverReport rep = cover_checks(fam, 2, 3);
  CHECK(rep.ok);
  CHECK(rep.kernel_elements == 0);
  CHECK(rep.abelianization_match);
}

TEST_CASE("non-effective family: the development action kernel is the product of the cores") {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < 2; ++i)
    pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(4), {Perm::from_cycles("(0 2)(1 3)", 4)}));
  PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
  CoverReport rep = cover_checks(fam, 2, 2);
  CHECK(rep.action_kernel_matches_cores);
  CHECK(rep.action_kernel_checks > 0);
  CHECK(rep.abelianization_match);
  CHECK_FALSE(rep.torsion_checked);  // matrix engine needs effective actions
  CHECK(rep.ok);
}
