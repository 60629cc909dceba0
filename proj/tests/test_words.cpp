#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gpp/error.hpp"
#include "gpp/present.hpp"
#include "gpp/words.hpp"

using namespace gpp;

namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

PairFamily z2_family(SimpleGraph graph) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < graph.n(); ++i) pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
  return PairFamily(std::move(graph), std::move(pairs));
}

}  // namespace

TEST_CASE("presentation of small graph products") {
  SUBCASE("complete graph, two Z2 factors: direct product of order 4") {
    PairFamily fam = z2_family(SimpleGraph::complete(labels(2)));
    Presentation p = build_presentation(fam);
    CHECK(p.gens.size() == 2);
    CHECK(p.vertex_relators.size() == 2);
    CHECK(p.commutator_relators.size() == 1);
    CHECK(p.abelianization() == AbelianInvariants{{2, 2}, 0});
    CHECK(p.relator_str(p.commutator_relators[0]) == "[v1,v2]");
  }
  SUBCASE("empty graph, two Z2 factors: no commutators") {
    PairFamily fam = z2_family(SimpleGraph::empty_graph(labels(2)));
    Presentation p = build_presentation(fam);
    CHECK(p.gens.size() == 2);
    CHECK(p.vertex_relators.size() == 2);
    CHECK(p.commutator_relators.empty());
  }
  SUBCASE("empty graph, two (S3, <(0 1)>) pairs: exactly the subgroup-rule commutators") {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < 2; ++i)
      pairs.push_back(
          VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)}));
    PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
    Presentation p = build_presentation(fam);
    CHECK(p.gens.size() == 4);
    // pairs (s,t) with s or t generating the subgroup: 2*2 - 1 = 3
    CHECK(p.commutator_relators.size() == 3);
  }
  SUBCASE("presets get their standard presentations") {
    std::vector<VertexPair> pairs{VertexPair::free_z(), VertexPair::inf_dihedral()};
    PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
    Presentation p = build_presentation(fam);
    CHECK(p.gens.size() == 3);
    CHECK(p.vertex_relators.size() == 2);  // s^2, t^2
  }
}

TEST_CASE("normal forms in the free product Z2 * Z2") {
  PairFamily fam = z2_family(SimpleGraph::empty_graph(labels(2)));
  Perm g = Perm::from_cycles("(0 1)", 2);

  // enumerate all words of length <= 3 over {a, b}
  std::vector<RawWord> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<RawWord> next;
    for (const RawWord& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int v = 0; v < 2; ++v) {
          RawWord w2 = w;
          w2.emplace_back(v, VElem(g));
          next.push_back(w2);
        }
    for (auto& w : next) words.push_back(std::move(w));
  }

  std::set<GPElement> forms;
  std::map<std::pair<long long, int>, GPElement> dihedral_oracle;
  for (const RawWord& w : words) {
    GPElement e = normalize(fam, w);
    forms.insert(e);
    // independent oracle: evaluate in the infinite dihedral group
    DihElem d = DihElem::identity();
    for (const auto& [v, val] : w) d = d * (v == 0 ? DihElem::s() : DihElem::t());
    auto key = std::make_pair(d.shift, d.flip);
    auto it = dihedral_oracle.find(key);
    if (it != dihedral_oracle.end())
      CHECK(it->second == e);
    else
      dihedral_oracle.emplace(key, e);
  }
  CHECK(forms.size() == 7);
  CHECK(dihedral_oracle.size() == 7);
  CHECK(normalize(fam, {}).is_identity());
}

TEST_CASE("shuffles pick the least vertex order") {
  PairFamily fam = z2_family(SimpleGraph::complete(labels(2)));
  Perm g = Perm::from_cycles("(0 1)", 2);
  GPElement ba = normalize(fam, {{1, VElem(g)}, {0, VElem(g)}});
  REQUIRE(ba.word.size() == 2);
  CHECK(ba.word[0].v == 0);
  CHECK(ba.word[1].v == 1);
}

TEST_CASE("multiplication and inversion") {
  SUBCASE("identity behaves") {
    PairFamily fam = z2_family(SimpleGraph::cycle(labels(5)));
    GPElement e = identity_element(fam);
    GPElement x =
        normalize(fam, {{0, VElem(Perm::from_cycles("(0 1)", 2))}, {2, VElem(Perm::from_cycles("(0 1)", 2))}});
    CHECK(multiply(fam, x, e) == x);
    CHECK(multiply(fam, e, x) == x);
    CHECK(multiply(fam, x, inverse(fam, x)).is_identity());
  }
  SUBCASE("same-vertex letters merge in Z4 * Z4") {
    std::vector<VertexPair> pairs{VertexPair::finite(FiniteGroup::cyclic(4), {}),
                                  VertexPair::finite(FiniteGroup::cyclic(4), {})};
    PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
    Perm g = Perm::from_cycles("(0 1 2 3)", 4);
    GPElement x = normalize(fam, {{0, VElem(g)}});
    GPElement sq = multiply(fam, x, x);
    REQUIRE(sq.word.size() == 1);
    CHECK(letter_value(fam, sq.word[0]) == VElem(g * g));
  }
  SUBCASE("subgroup letters land in the subgroup part") {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < 2; ++i)
      pairs.push_back(
          VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)}));
    PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
    Perm b = Perm::from_cycles("(0 1 2)", 3);
    Perm c = Perm::from_cycles("(1 2)", 3);  // not in A = <(0 1)>
    Perm a = Perm::from_cycles("(0 1)", 3);

    GPElement x = normalize(fam, {{0, VElem(b)}, {1, VElem(c)}});
    CHECK(x.word.size() == 2);  // both are nontrivial coset letters

    GPElement y = normalize(fam, {{0, VElem(b)}, {1, VElem(a)}});
    CHECK(y.word.size() == 1);  // the subgroup element migrates into the part
    CHECK(y.apart[1] != 0);
  }
  SUBCASE("family mismatch is rejected") {
    PairFamily f1 = z2_family(SimpleGraph::empty_graph(labels(2)));
    PairFamily f2 = z2_family(SimpleGraph::empty_graph(labels(2)));
    GPElement x = identity_element(f1);
    GPElement y = identity_element(f2);
    CHECK_THROWS_AS(multiply(f1, x, y), InvalidInput);
  }
  SUBCASE("letters outside the vertex group are rejected") {
    PairFamily fam = z2_family(SimpleGraph::empty_graph(labels(2)));
    CHECK_THROWS_AS(normalize(fam, {{0, VElem(Perm::from_cycles("(0 1 2)", 3))}}), InvalidInput);
  }
}

TEST_CASE("product image") {
  PairFamily fam = z2_family(SimpleGraph::empty_graph(labels(2)));
  Perm g = Perm::from_cycles("(0 1)", 2);
  SUBCASE("identity maps to the identity tuple") {
    CHECK(product_image_trivial(fam, identity_element(fam)));
  }
  SUBCASE("abab maps to the identity tuple") {
    GPElement x = normalize(fam, {{0, VElem(g)}, {1, VElem(g)}, {0, VElem(g)}, {1, VElem(g)}});
    CHECK(x.word.size() == 4);
    CHECK(product_image_trivial(fam, x));
  }
  SUBCASE("homomorphism property on sampled pairs") {
    std::mt19937_64 rng(3);
    std::vector<VertexPair> pairs;
    pairs.push_back(VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)}));
    pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(4), {}));
    pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
    PairFamily f(SimpleGraph::path(labels(3)), std::move(pairs));
    RawWord alpha = generator_alphabet(f);
    auto random_element = [&] {
      RawWord w;
      int len = static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) w.push_back(alpha[rng() % alpha.size()]);
      return normalize(f, w);
    };
    for (int trial = 0; trial < 60; ++trial) {
      GPElement x = random_element(), y = random_element();
      auto lhs = product_image(f, multiply(f, x, y));
      auto px = product_image(f, x), py = product_image(f, y);
      for (int v = 0; v < f.n(); ++v)
        CHECK(lhs[static_cast<std::size_t>(v)] ==
              f.pair(v).mult(px[static_cast<std::size_t>(v)], py[static_cast<std::size_t>(v)]));
    }
  }
}

TEST_CASE("membership in clique subgroups") {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < 2; ++i)
    pairs.push_back(VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)}));
  PairFamily fam(SimpleGraph::empty_graph(labels(2)), std::move(pairs));
  Perm b = Perm::from_cycles("(0 1 2)", 3);
  Perm a = Perm::from_cycles("(0 1)", 3);

  CHECK(supported_on(fam, identity_element(fam), 0u));
  // element with empty word but nontrivial subgroup part lies in G_empty
  GPElement apart_only = normalize(fam, {{0, VElem(a)}, {1, VElem(a)}});
  CHECK(apart_only.word.empty());
  CHECK(supported_on(fam, apart_only, 0u));

  PairFamily z2s = z2_family(SimpleGraph::empty_graph(labels(2)));
  Perm g = Perm::from_cycles("(0 1)", 2);
  GPElement ab = normalize(z2s, {{0, VElem(g)}, {1, VElem(g)}});
  CHECK_FALSE(supported_on(z2s, ab, 1u << 0));
  CHECK(supported_on(z2s, normalize(z2s, {{0, VElem(g)}}), 1u << 0));
}

TEST_CASE("abelianization of presentations") {
  SUBCASE("single Z2") {
    std::vector<VertexPair> pairs{VertexPair::finite(FiniteGroup::cyclic(2), {})};
    PairFamily fam(SimpleGraph::empty_graph(labels(1)), std::move(pairs));
    CHECK(build_presentation(fam).abelianization() == AbelianInvariants{{2}, 0});
  }
  SUBCASE("free product of two Z2") {
    PairFamily fam = z2_family(SimpleGraph::empty_graph(labels(2)));
    CHECK(build_presentation(fam).abelianization() == AbelianInvariants{{2, 2}, 0});
  }
  SUBCASE("pentagon of Z2 factors") {
    PairFamily fam = z2_family(SimpleGraph::cycle(labels(5)));
    CHECK(build_presentation(fam).abelianization() == AbelianInvariants{{2, 2, 2, 2, 2}, 0});
  }
  SUBCASE("free abelian from two Z vertices on an edge") {
    std::vector<VertexPair> pairs{VertexPair::free_z(), VertexPair::free_z()};
    PairFamily fam(SimpleGraph::complete(labels(2)), std::move(pairs));
    CHECK(build_presentation(fam).abelianization() == AbelianInvariants{{}, 2});
  }
}

TEST_CASE("restriction to a full subgraph multiplies identically") {
  std::mt19937_64 rng(17);
  PairFamily pent = z2_family(SimpleGraph::cycle(labels(5)));
  PairFamily path = z2_family(SimpleGraph::cycle(labels(5)).full_subgraph({0, 1, 2}));
  Perm g = Perm::from_cycles("(0 1)", 2);
  for (int trial = 0; trial < 40; ++trial) {
    RawWord w;
    int len = static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) w.emplace_back(static_cast<int>(rng() % 3), VElem(g));
    GPElement big = normalize(pent, w);
    GPElement small = normalize(path, w);
    REQUIRE(big.word.size() == small.word.size());
    for (std::size_t i = 0; i < big.word.size(); ++i) {
      CHECK(big.word[i].v == small.word[i].v);
      CHECK(big.word[i].a == small.word[i].a);
    }
  }
}

TEST_CASE("special cases: complete and empty graphs") {
  SUBCASE("complete graph gives exactly the direct-product element count") {
    std::vector<VertexPair> pairs{VertexPair::finite(FiniteGroup::cyclic(2), {}),
                                  VertexPair::finite(FiniteGroup::symmetric(3), {})};
    PairFamily fam(SimpleGraph::complete(labels(2)), std::move(pairs));
    RawWord alpha = generator_alphabet(fam);
    std::set<GPElement> seen{identity_element(fam)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const GPElement& x : std::vector<GPElement>(seen.begin(), seen.end()))
        for (const auto& [v, g] : alpha)
          if (seen.insert(mul_letter(fam, x, v, g)).second) grew = true;
    }
    CHECK(seen.size() == 12);
  }
  SUBCASE("empty graph with trivial subgroups gives alternating words") {
    PairFamily fam = z2_family(SimpleGraph::empty_graph(labels(2)));
    Perm g = Perm::from_cycles("(0 1)", 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      RawWord w;
      int len = static_cast<int>(rng() % 7);
      for (int i = 0; i < len; ++i) w.emplace_back(static_cast<int>(rng() % 2), VElem(g));
      GPElement x = normalize(fam, w);
      for (std::size_t i = 0; i + 1 < x.word.size(); ++i) CHECK(x.word[i].v != x.word[i + 1].v);
    }
  }
}

TEST_CASE("normalization is compatible with splitting the word anywhere") {
  std::mt19937_64 rng(23);
  std::vector<VertexPair> pairs;
  pairs.push_back(VertexPair::finite(FiniteGroup::symmetric(3), {Perm::from_cycles("(0 1)", 3)}));
  pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(4), {Perm::from_cycles("(0 2)(1 3)", 4)}));
  pairs.push_back(VertexPair::finite(FiniteGroup::cyclic(2), {}));
  SimpleGraph g(labels(3), {{0, 1}});
  PairFamily fam(std::move(g), std::move(pairs));
  RawWord alpha = generator_alphabet(fam);
  for (int trial = 0; trial < 80; ++trial) {
    RawWord w;
    int len = static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) w.push_back(alpha[rng() % alpha.size()]);
    GPElement whole = normalize(fam, w);
    std::size_t cut = w.empty() ? 0 : rng() % (w.size() + 1);
    RawWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
    RawWord right(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
    CHECK(whole == multiply(fam, normalize(fam, left), normalize(fam, right)));
    // inverse round-trip
    CHECK(multiply(fam, whole, inverse(fam, whole)).is_identity());
  }
}
