#include <set>

#include "doctest.h"
#include "gpp/commensure.hpp"
#include "gpp/error.hpp"
#include "gpp/linearity.hpp"

using namespace gpp;

namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

PairFamily z4_pair_family() {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < 2; ++i) pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(4), {}));
  return PairFamily(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
}

PairFamily klein_pair_family() {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < 2; ++i) pairs.push_back(VertexPair::finite(FiniteGroup::dihedral(2), {}));
  return PairFamily(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
}

HSpec z2_in_z4() {
  HSpec h;
  h.gens = {Perm::from_cycles("(0 2)(1 3)", 4)};
  return h;
}

HSpec z2_in_klein() {
  HSpec h;
  h.gens = {Perm::from_cycles("(0 1)", 4)};
  return h;
}

}  // namespace

TEST_CASE("identity instance gives the whole group") {
  PairFamily a = z4_pair_family();
  PairFamily b = z4_pair_family();
  std::vector<HSpec> h{HSpec::whole_group(a.pair(0)), HSpec::whole_group(a.pair(1))};
  CommInstance inst(a, b, h, h);
  CommWitness w = common_subgroup(inst);
  CHECK(w.index == 1);
  CHECK(w.index_star == 1);
  EquivIsoReport rep = equivariant_building_iso(inst, 2);
  CHECK(rep.ok);
  CHECK(rep.violations == 0);
}

TEST_CASE("Z4 versus Z2xZ2 with common subgroup Z2") {
  PairFamily a = z4_pair_family();
  PairFamily b = klein_pair_family();
  std::vector<HSpec> h{z2_in_z4(), z2_in_z4()};
  std::vector<HSpec> hs{z2_in_klein(), z2_in_klein()};
  CommInstance inst(a, b, h, hs);

  SUBCASE("index is the product of the vertex indices") {
    CommWitness w = common_subgroup(inst);
    CHECK(w.index == 4);
    CHECK(w.index_star == 4);
    CHECK(w.reduced_flag);
    CHECK_FALSE(w.schreier.empty());
    // every Schreier generator projects into the product of the subgroups
    for (const GPElement& g : w.schreier) {
      auto omega = product_image(inst.family(), g);
      for (int v = 0; v < inst.n(); ++v) CHECK(inst.h_contains(v, omega[static_cast<std::size_t>(v)]));
    }
  }
  SUBCASE("equivariant isomorphism of the truncated developments") {
    EquivIsoReport rep = equivariant_building_iso(inst, 3);
    CHECK(rep.ok);
    CHECK(rep.consistency_ok);
    CHECK(rep.violations == 0);
    CHECK(rep.skipped_fraction < 0.30);
    CHECK(rep.checks > 0);
  }
  SUBCASE("closure sampling: Schreier generators reach the short subgroup elements") {
    CommWitness w = common_subgroup(inst);
    const PairFamily& fam = inst.family();
    // ball of the subgroup generated by the Schreier set
    std::set<GPElement> subgroup_ball{identity_element(fam)};
    std::vector<GPElement> gens = w.schreier;
    for (const GPElement& g : w.schreier) gens.push_back(inverse(fam, g));
    for (int depth = 0; depth < 3; ++depth) {
      std::set<GPElement> next = subgroup_ball;
      for (const GPElement& x : subgroup_ball)
        for (const GPElement& g : gens) next.insert(multiply(fam, x, g));
      subgroup_ball = std::move(next);
    }
    // all length-<=2 elements of the preimage subgroup appear
    for (const GPElement& x : enumerate_ball(fam, 2)) {
      auto omega = product_image(fam, x);
      bool inside = true;
      for (int v = 0; v < inst.n(); ++v)
        if (!inst.h_contains(v, omega[static_cast<std::size_t>(v)])) inside = false;
      if (inside) CHECK(subgroup_ball.count(x) == 1);
    }
  }
  SUBCASE("re-rooting stability: conjugates of generators stay in the subgroup") {
    CommWitness w = common_subgroup(inst);
    const PairFamily& fam = inst.family();
    const GPElement& d = w.schreier.front();
    for (const GPElement& g : w.schreier) {
      GPElement conj = multiply(fam, multiply(fam, d, g), inverse(fam, d));
      auto omega = product_image(fam, conj);
      for (int v = 0; v < inst.n(); ++v) CHECK(inst.h_contains(v, omega[static_cast<std::size_t>(v)]));
    }
  }
}

TEST_CASE("corrupted point bijection fails verification immediately") {
  PairFamily a = z4_pair_family();
  PairFamily b = klein_pair_family();
  std::vector<HSpec> h{z2_in_z4(), z2_in_z4()};
  std::vector<HSpec> hs{z2_in_klein(), z2_in_klein()};
  CommInstance inst(a, b, h, hs);
  inst.prepare();
  ActionIso bad = inst.iso(0);
  // swap two points in a way that breaks equivariance: the subgroup action
  // pairs the points as orbits {x, h.x}; crossing one orbit breaks it
  FiniteAction act = FiniteAction::restrict_to(inst.h_subgroup(0), inst.family().pair(0).cosets);
  int x0 = 0, hx0 = -1;
  for (std::size_t hi = 0; hi < act.table.size(); ++hi)
    if (!act.group.elements()[hi].is_identity()) hx0 = act.act(static_cast<int>(hi), x0);
  REQUIRE(hx0 >= 0);
  // make phi send the orbit {x0, h x0} onto a non-orbit pair
  for (int y = 0; y < act.points; ++y) {
    if (y == x0 || y == hx0) continue;
    std::swap(bad.phi[static_cast<std::size_t>(hx0)], bad.phi[static_cast<std::size_t>(y)]);
    break;
  }
  ActionIso probe = bad;
  FiniteAction act_star =
      FiniteAction::restrict_to(inst.h_subgroup_star(0), inst.family_star().pair(0).cosets);
  CHECK_FALSE(check_action_iso(act, act_star, probe).ok);  // genuinely corrupted
  inst.set_iso(0, bad);
  EquivIsoReport rep = equivariant_building_iso(inst, 2);
  CHECK_FALSE(rep.ok);
  bool detected_early = (!rep.consistency_ok && rep.first_violation_radius <= 1) ||
                        (rep.violations > 0 && rep.first_violation_radius <= 1);
  CHECK(detected_early);
}

TEST_CASE("negative control: free products of Z2 and Z3 are refused") {
  std::vector<VertexPair> pa, pb;
  for (int i = 0; i < 2; ++i) {
    pa.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
    pb.push_back(VertexPair::finite(FiniteGroup::cyclic(3), {}));
  }
  PairFamily a(SimpleGraph::empty_graph(labels(2)), std::move(pa));
  PairFamily b(SimpleGraph::empty_graph(labels(2)), std::move(pb));
  std::vector<HSpec> h{HSpec::trivial_subgroup(), HSpec::trivial_subgroup()};
  CommInstance inst(a, b, h, h);
  CHECK_THROWS_AS(inst.prepare(), HypothesisRefused);
}

TEST_CASE("building isomorphism from equal coset counts alone") {
  auto pent_z4 = [] {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < 5; ++i)
      pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(4), {Perm::from_cycles("(0 2)(1 3)", 4)}));
    return PairFamily(SimpleGraph::cycle(labels(5)), std::move(pairs));
  };
  auto pent_klein = [] {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < 5; ++i)
      pairs.push_back(VertexPair::finite(FiniteGroup::dihedral(2), {Perm::from_cycles("(0 1)", 4)}));
    return PairFamily(SimpleGraph::cycle(labels(5)), std::move(pairs));
  };
  SUBCASE("any family against itself is the identity") {
    PairFamily fam = pent_z4();
    BuildingIsoReport rep = building_iso_only(fam, pent_z4(), 2);
    CHECK(rep.ok);
    for (const auto& [x, y] : rep.vertex_map) {
      CHECK(x.clique == y.clique);
      CHECK(x.word.size() == y.word.size());
    }
  }
  SUBCASE("index-2 pairs over the pentagon match") {
    BuildingIsoReport rep = building_iso_only(pent_z4(), pent_klein(), 2);
    CHECK(rep.ok);
    CHECK(rep.verts_mapped > 0);
  }
  SUBCASE("unequal coset counts are refused") {
    std::vector<VertexPair> pa{VertexPair::finite(FiniteGroup::cyclic(2), {})};
    std::vector<VertexPair> pb{VertexPair::finite(FiniteGroup::cyclic(3), {})};
    PairFamily a(SimpleGraph::empty_graph(labels(1)), std::move(pa));
    PairFamily b(SimpleGraph::empty_graph(labels(1)), std::move(pb));
    CHECK_THROWS_AS(building_iso_only(a, b, 1), HypothesisRefused);
  }
}

TEST_CASE("locally finite commensurability scenario") {
  auto pent = [](bool klein) {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < 5; ++i) {
      if (klein)
        pairs.push_back(VertexPair::finite(FiniteGroup::dihedral(2), {Perm::from_cycles("(0 1)", 4)}));
      else
        pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
    }
    return PairFamily(SimpleGraph::cycle(labels(5)), std::move(pairs));
  };
  SUBCASE("a family against itself") {
    Cor561Report rep = cor561_scenario(pent(false), pent(false), 2);
    CHECK(rep.ok);
    CHECK(rep.locally_finite);
    CHECK(rep.properly_discontinuous);
    CHECK(rep.common_index == 32);
    CHECK(rep.max_stabilizer_order == 4);  // an edge clique of two Z2 factors
  }
  SUBCASE("infinite vertex groups are refused") {
    std::vector<VertexPair> pairs{VertexPair::free_z()};
    PairFamily raag(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    std::vector<VertexPair> pairs2{VertexPair::finite(FiniteGroup::cyclic(2), {})};
    PairFamily fin(SimpleGraph::empty_graph(labels(1)), std::move(pairs2));
    CHECK_THROWS_AS(cor561_scenario(raag, raag, 1), HypothesisRefused);
  }
}

TEST_CASE("free-abelian versus infinite-dihedral vertices share an index 2^n subgroup") {
  std::vector<VertexPair> pa{VertexPair::free_z(), VertexPair::free_z()};
  std::vector<VertexPair> pb{VertexPair::inf_dihedral(), VertexPair::inf_dihedral()};
  PairFamily artin(SimpleGraph::empty_graph(labels(2)), std::move(pa));
  PairFamily coxeter(SimpleGraph::empty_graph(labels(2)), std::move(pb));
  HSpec even_z;
  even_z.z_modulus = 2;
  HSpec translations;
  translations.dih = DihSubgroup::translations();
  CommInstance inst(artin, coxeter, {even_z, even_z}, {translations, translations});
  CommWitness w = common_subgroup(inst);
  CHECK(w.index == 4);
  CHECK(w.index_star == 4);
  for (const GPElement& g : w.schreier) {
    auto omega = product_image(inst.family(), g);
    for (int v = 0; v < 2; ++v) CHECK(inst.h_contains(v, omega[static_cast<std::size_t>(v)]));
  }
  for (const GPElement& g : w.schreier_star) {
    auto omega = product_image(inst.family_star(), g);
    for (int v = 0; v < 2; ++v) CHECK(inst.h_star_contains(v, omega[static_cast<std::size_t>(v)]));
  }
  // mismatched subgroup shapes are refused
  HSpec refl;
  refl.dih = DihSubgroup::generated_by({DihElem::s(), DihElem{2, 1}});
  CommInstance bad(artin, coxeter, {even_z, even_z}, {translations, refl});
  CHECK_THROWS_AS(bad.prepare(), HypothesisRefused);
}
