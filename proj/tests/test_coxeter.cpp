#include <set>

#include "doctest.h"
#include "gpp/coxeter.hpp"
#include "gpp/error.hpp"
#include "gpp/linearity.hpp"

using namespace gpp;

namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

}  // namespace

TEST_CASE("coxeter matrices of graph products of pairs") {
  SUBCASE("complete graph gives the direct-product matrix") {
    std::vector<CoxeterPair> pairs(2);
    pairs[0] = {CoxeterMatrix::inf_dihedral("s", "t"), {}};
    pairs[1] = {CoxeterMatrix::single("u"), {}};
    CoxeterMatrix m = coxeter_from_pairs(SimpleGraph::complete(labels(2)), pairs);
    CHECK(m.n() == 3);
    CHECK(m.entry(0, 2) == 2);
    CHECK(m.entry(1, 2) == 2);
    CHECK(m.entry(0, 1) == CoxeterMatrix::kInfinity);
  }
  SUBCASE("two infinite dihedral pairs with parabolic <s> on the empty graph") {
    std::vector<CoxeterPair> pairs(2, CoxeterPair{CoxeterMatrix::inf_dihedral("s", "t"), {0}});
    CoxeterMatrix m = coxeter_from_pairs(SimpleGraph::empty_graph(labels(2)), pairs);
    // order: v1.s v1.t v2.s v2.t
    CHECK(m.entry(0, 2) == 2);  // s1 s2
    CHECK(m.entry(0, 3) == 2);  // s1 t2
    CHECK(m.entry(1, 2) == 2);  // t1 s2
    CHECK(m.entry(1, 3) == CoxeterMatrix::kInfinity);  // t1 t2
  }
  SUBCASE("two braid pairs with parabolic <a> on the empty graph") {
    std::vector<CoxeterPair> pairs(2, CoxeterPair{CoxeterMatrix::symmetric_group(3, "g"), {0}});
    CoxeterMatrix m = coxeter_from_pairs(SimpleGraph::empty_graph(labels(2)), pairs);
    CHECK(m.entry(0, 1) == 3);
    CHECK(m.entry(0, 2) == 2);
    CHECK(m.entry(0, 3) == 2);
    CHECK(m.entry(1, 2) == 2);
    CHECK(m.entry(1, 3) == CoxeterMatrix::kInfinity);
  }
}

TEST_CASE("reflection representation") {
  SUBCASE("single generator") {
    TitsRep rep = tits_rep(CoxeterMatrix::single("s"));
    CHECK(rep.gen[0].at(0, 0) == -1);
  }
  SUBCASE("infinite dihedral matrices match the classical form") {
    TitsRep rep = tits_rep(CoxeterMatrix::inf_dihedral("s", "t"));
    IMat s = rep.gen[0], t = rep.gen[1];
    CHECK(s.at(0, 0) == -1);
    CHECK(s.at(0, 1) == 2);
    CHECK(s.at(1, 0) == 0);
    CHECK(s.at(1, 1) == 1);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 0) == 2);
    CHECK(t.at(1, 1) == -1);
    // entries of (st)^k grow strictly
    IMat st = s * t;
    BigInt prev = st.max_abs();
    IMat p = st;
    for (int k = 2; k <= 10; ++k) {
      p = p * st;
      CHECK(p.max_abs() > prev);
      prev = p.max_abs();
    }
  }
  SUBCASE("commuting and braid relations hold exactly") {
    std::vector<CoxeterPair> pairs(2, CoxeterPair{CoxeterMatrix::symmetric_group(3, "g"), {0}});
    CoxeterMatrix m = coxeter_from_pairs(SimpleGraph::complete(labels(2)), pairs);
    TitsRep rep = tits_rep(m);  // construction verifies everything
    IMat braid = rep.gen[0] * rep.gen[1];
    CHECK(braid.pow(3).is_identity());
    CHECK_FALSE(braid.pow(2).is_identity());
    CHECK(rep.gen[0] * rep.gen[2] == rep.gen[2] * rep.gen[0]);
  }
  SUBCASE("unsupported entries are rejected") {
    CHECK_THROWS_AS(tits_rep(CoxeterMatrix::dihedral(5, "s", "t")), InvalidInput);
  }
}

TEST_CASE("symmetric-group embedding of a family") {
  SUBCASE("a Z2 vertex lands in the 1-generator block") {
    std::vector<VertexPair> pairs{VertexPair::finite(FiniteGroup::cyclic(2), {})};
    PairFamily fam(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    SymmetricEmbedding emb = embed_symmetric(fam);
    CHECK(emb.target.n() == 1);
    CHECK(emb.gen_words[0][0].second == std::vector<int>{0});
  }
  SUBCASE("S3 with a transposition subgroup is effective on 3 cosets") {
    std::vector<VertexPair> pairs{
        VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)})};
    PairFamily fam(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    SymmetricEmbedding emb = embed_symmetric(fam);
    CHECK(emb.target.n() == 2);  // two adjacent transpositions of S_3
    CHECK(emb.target.entry(0, 1) == 3);
    // parabolic = the transpositions fixing the identity coset
    CHECK(emb.blocks[0].parabolic == std::vector<int>{1});
  }
  SUBCASE("the coset action and the image action are equivariantly isomorphic") {
    auto check_vertex = [](GroupPtr g, std::vector<Perm> a_gens) {
      VertexPair p = VertexPair::finite(std::move(g), std::move(a_gens));
      int m = static_cast<int>(p.cosets.size());
      // target: the symmetric group on the coset points with the stabilizer
      auto sym = FiniteGroup::symmetric(m);
      std::vector<Perm> stab_gens;
      for (const Perm& x : sym->elements())
        if (x(0) == 0) stab_gens.push_back(x);
      Subgroup stab(sym, stab_gens);
      CosetSpace target_cosets(sym, stab);
      // image subgroup generated by the coset-action permutations
      std::vector<Perm> image_gens;
      for (const Perm& x : p.group->generators()) {
        std::vector<int> img(static_cast<std::size_t>(m));
        for (int pt = 0; pt < m; ++pt) img[static_cast<std::size_t>(pt)] = p.cosets.act(x, pt);
        image_gens.push_back(Perm(std::move(img)));
      }
      Subgroup image(sym, image_gens);
      Subgroup whole(p.group, p.group->generators());
      FiniteAction left = FiniteAction::restrict_to(whole, p.cosets);
      FiniteAction right = FiniteAction::restrict_to(image, target_cosets);
      ActionIso iso;
      for (const Perm& x : image_gens) iso.psi_gen_images.push_back(image.index_of(x));
      // the coset of sigma in S_m / Stab(0) is determined by sigma(0)
      iso.phi.resize(static_cast<std::size_t>(m));
      for (int pt = 0; pt < m; ++pt) {
        // find the target point whose representative sends 0 to pt
        iso.phi[static_cast<std::size_t>(pt)] = -1;
        for (int q = 0; q < target_cosets.size(); ++q)
          if (target_cosets.rep(q)(0) == pt) iso.phi[static_cast<std::size_t>(pt)] = q;
      }
      ActionIsoReport rep = check_action_iso(left, right, iso);
      CHECK(rep.ok);
      if (!rep.ok) MESSAGE(rep.violation);
    };
    check_vertex(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)});
    check_vertex(FiniteGroup::cyclic(4), {});
  }
  SUBCASE("non-effective actions are refused and reduce fixes them") {
    std::vector<VertexPair> pairs{
        VertexPair::finite(FiniteGroup::cyclic(4), {Perm::from_cycles("(0 2)(1 3)", 4)})};
    PairFamily fam(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    CHECK_THROWS_AS(embed_symmetric(fam), HypothesisRefused);
    PairFamily red = reduce_family(fam);
    CHECK(red.pair(0).group_order() == 2);
    CHECK(red.pair(0).a.order() == 1);
    CHECK(red.pair(0).coset_count() == 2);
    CHECK(red.all_effective());
    CHECK_NOTHROW(embed_symmetric(red));
    // with a normal subgroup, reduction is the quotient by it
    CHECK(red.pair(0).group->abelian_invariants() == std::vector<long long>{2});
  }
  SUBCASE("effective families are unchanged by reduce") {
    std::vector<VertexPair> pairs{
        VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)})};
    PairFamily fam(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    PairFamily red = reduce_family(fam);
    CHECK(red.pair(0).group_order() == 6);
  }
}

TEST_CASE("retractions onto parabolic subgroups") {
  SUBCASE("empty parabolic gives the trivial retraction with full kernel") {
    auto op = orthoparabolic_find(CoxeterMatrix::inf_dihedral("s", "t"), {});
    REQUIRE(op.has_value());
    CHECK(op->kernel_computed);
    CHECK(op->parabolic_order == 1);
    CHECK(op->kernel_schreier.size() == 2);  // s and t themselves
  }
  SUBCASE("dihedral groups retract onto a reflection with cyclic kernel") {
    for (int p : {3, 5, 7}) {
      auto op = orthoparabolic_find(CoxeterMatrix::dihedral(p, "s", "t"), {0});
      REQUIRE(op.has_value());
      CHECK(op->rho[0] == 0);
      if (p % 2 == 1) CHECK(op->rho[1] == 0);  // t must map to s when p is odd
      REQUIRE(op->kernel_computed);
      CHECK(op->parabolic_order == 2);
      // verify in the finite permutation model: the kernel is cyclic of order p
      auto dp = FiniteGroup::dihedral(p);
      Perm rot = dp->generators()[0], refl = dp->generators()[1];
      Perm s = refl;                 // a reflection
      Perm t = rot * refl;           // another reflection; st = rotation
      auto to_perm = [&](const std::vector<int>& word) {
        Perm acc = Perm::identity(dp->degree());
        for (int g : word) acc = acc * (g == 0 ? s : t);
        return acc;
      };
      std::vector<Perm> kernel_gens;
      for (const auto& w : op->kernel_schreier) kernel_gens.push_back(to_perm(w));
      Subgroup kernel(dp, kernel_gens);
      CHECK(kernel.order() == static_cast<std::size_t>(p));
      bool cyclic = false;
      for (const Perm& x : kernel.elements()) {
        int ord = 1;
        Perm acc = x;
        while (!acc.is_identity()) {
          acc = acc * x;
          ++ord;
        }
        if (ord == p) cyclic = true;
      }
      CHECK(cyclic);
      // rho is a homomorphism on the finite model: check the relator images
      CHECK(to_perm(rho_apply(*op, {0, 0})).is_identity());
      CHECK(to_perm(rho_apply(*op, {1, 1})).is_identity());
      std::vector<int> stp;
      for (int i = 0; i < p; ++i) {
        stp.push_back(0);
        stp.push_back(1);
      }
      CHECK(to_perm(rho_apply(*op, stp)).is_identity());
    }
  }
  SUBCASE("right-angled groups always have single-generator retractions") {
    CoxeterMatrix pent;
    pent.labels = labels(5);
    pent.m.assign(5, std::vector<int>(5, CoxeterMatrix::kInfinity));
    for (int i = 0; i < 5; ++i) {
      pent.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      pent.m[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % 5)] = 2;
      pent.m[static_cast<std::size_t>((i + 1) % 5)][static_cast<std::size_t>(i)] = 2;
    }
    for (int g = 0; g < 5; ++g) CHECK(orthoparabolic_find(pent, {g}).has_value());
  }
}

TEST_CASE("even subgroups") {
  SUBCASE("a single Z2 has trivial even subgroup") {
    EvenSubgroup e = even_subgroup(CoxeterMatrix::single("s"));
    CHECK(e.gens.size() == 1);  // the pair (s,s), i.e. the identity
    CHECK(e.gens[0] == std::pair<int, int>{0, 0});
  }
  SUBCASE("the infinite dihedral even subgroup is the translations, index 2") {
    EvenSubgroup e = even_subgroup(CoxeterMatrix::inf_dihedral("s", "t"));
    std::vector<DihElem> gens;
    for (auto [i, j] : e.gens) {
      DihElem a = (i == 0 ? DihElem::s() : DihElem::t());
      DihElem b = (j == 0 ? DihElem::s() : DihElem::t());
      gens.push_back(a * b);
    }
    DihSubgroup k = DihSubgroup::generated_by(gens);
    CHECK_FALSE(k.has_reflections);
    CHECK(k.index_in_whole() == 2);
    CHECK(dih_coset_reps(k).size() == 2);
  }
}

TEST_CASE("index-n subgroups through the infinite dihedral parabolic") {
  CoxeterMatrix w = CoxeterMatrix::inf_dihedral("s", "t");
  SUBCASE("n = 1 gives the whole group") {
    DinftySubgroupData d = dinfty_subgroups(w, 1);
    CHECK(d.verified_index == 1);
  }
  SUBCASE("even and odd indices verified by coset enumeration for k <= 5") {
    for (int n = 2; n <= 11; ++n) {
      DinftySubgroupData d = dinfty_subgroups(w, n);
      CHECK(d.verified_index == n);
      CHECK(d.subgroup_gens.size() == 2);
      // the named generators really lie in the subgroup
      for (const auto& gen_word : d.subgroup_gens) CHECK(dinfty_sub_contains(w, d, gen_word));
      // Schreier generators of the preimage retract into the subgroup
      for (const auto& gen_word : d.preimage_schreier) CHECK(dinfty_sub_contains(w, d, gen_word));
    }
  }
  SUBCASE("a larger right-angled group: pullback through the retraction") {
    CoxeterMatrix square;  // 4-cycle: opposite generators do not commute
    square.labels = labels(4);
    square.m.assign(4, std::vector<int>(4, CoxeterMatrix::kInfinity));
    for (int i = 0; i < 4; ++i) {
      square.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      square.m[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % 4)] = 2;
      square.m[static_cast<std::size_t>((i + 1) % 4)][static_cast<std::size_t>(i)] = 2;
    }
    DinftySubgroupData d = dinfty_subgroups(square, 5);
    CHECK(d.verified_index == 5);
    CHECK_FALSE(d.preimage_schreier.empty());
    for (const auto& gen_word : d.preimage_schreier) CHECK(dinfty_sub_contains(square, d, gen_word));
    // generators orthogonal to the parabolic pair appear among the Schreier set
    bool has_other = false;
    for (const auto& gen_word : d.preimage_schreier)
      for (int g : gen_word)
        if (g != d.s_gen && g != d.t_gen) has_other = true;
    CHECK(has_other);
  }
  SUBCASE("finite groups are refused") {
    std::vector<CoxeterPair> pairs(2, CoxeterPair{CoxeterMatrix::single("s"), {}});
    CoxeterMatrix fin = coxeter_from_pairs(SimpleGraph::complete(labels(2)), pairs);
    CHECK_THROWS_AS(dinfty_subgroups(fin, 2), HypothesisRefused);
  }
}

TEST_CASE("matrix engine and the linearity pipeline") {
  SUBCASE("complete graph of Z2 pairs: diagonal involutions, faithful") {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < 2; ++i) pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
    PairFamily fam(SimpleGraph::complete(labels(2)), std::move(pairs));
    LinearityReport rep = linearity_pipeline(fam, 3);
    CHECK(rep.relations_ok);
    CHECK(rep.injective_on_sample);
    CHECK(rep.sample_elements == 4);
  }
  SUBCASE("free-abelian pentagon: commutators hold exactly on edges only") {
    std::vector<VertexPair> pairs(5, VertexPair::free_z());
    PairFamily fam(SimpleGraph::cycle(labels(5)), std::move(pairs));
    MatrixEngine engine(fam);
    CHECK(engine.dim() == 10);
    auto commutator_trivial = [&](int v, int w) {
      IMat a = engine.letter_matrix(v, VElem(static_cast<long long>(1)));
      IMat b = engine.letter_matrix(w, VElem(static_cast<long long>(1)));
      return a * b == b * a;
    };
    for (int v = 0; v < 5; ++v)
      for (int w = v + 1; w < 5; ++w)
        CHECK(commutator_trivial(v, w) == fam.adjacent(v, w));
    LinearityReport rep = linearity_pipeline(fam, 3);
    CHECK(rep.relations_ok);
    CHECK(rep.injective_on_sample);
  }
  SUBCASE("words engine and matrix engine agree on a mixed family") {
    std::vector<VertexPair> pairs;
    pairs.push_back(VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)}));
    pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
    PairFamily fam(SimpleGraph::path(labels(2)), std::move(pairs));
    MatrixEngine engine(fam);
    CHECK(engine.verify_relations().ok);
    // all word pairs of length <= 3 get the same verdict from both engines
    RawWord alphabet = generator_alphabet(fam);
    std::vector<RawWord> words{{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].size() >= 3) continue;
      for (const auto& l : alphabet) {
        RawWord w = words[i];
        w.push_back(l);
        words.push_back(std::move(w));
      }
    }
    std::map<GPElement, std::string> nf_to_matrix;
    for (const RawWord& w : words) {
      GPElement nf = normalize(fam, w);
      std::string key = engine.raw_matrix(w).str();
      auto [it, fresh] = nf_to_matrix.emplace(nf, key);
      CHECK(it->second == key);  // same normal form, same matrix
    }
    std::set<std::string> distinct;
    for (const auto& [nf, key] : nf_to_matrix) CHECK(distinct.insert(key).second);
  }
  SUBCASE("non-effective families are refused") {
    std::vector<VertexPair> pairs{
        VertexPair::finite(FiniteGroup::cyclic(4), {Perm::from_cycles("(0 2)(1 3)", 4)})};
    PairFamily fam(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    CHECK_THROWS_AS(MatrixEngine{fam}, HypothesisRefused);
  }
}
