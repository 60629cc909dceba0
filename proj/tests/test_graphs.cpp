#include <bit>
#include <set>

#include "doctest.h"
#include "gpp/error.hpp"
#include "gpp/graph.hpp"
#include "gpp/scomplex.hpp"

using namespace gpp;

namespace {

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

// independent chain-counting oracle for order complexes of a clique poset
struct ChainCounts {
  std::size_t vertices = 0, edges = 0, triangles = 0;
};
ChainCounts chain_oracle(const CliquePoset& cp) {
  ChainCounts c;
  c.vertices = static_cast<std::size_t>(cp.size());
  for (int i = 0; i < cp.size(); ++i)
    for (int j = 0; j < cp.size(); ++j) {
      if (i == j || !cp.leq(i, j)) continue;
      ++c.edges;
      for (int k = 0; k < cp.size(); ++k)
        if (k != j && cp.leq(j, k)) ++c.triangles;
    }
  return c;
}

}  // namespace

TEST_CASE("simple graph invariants") {
  SimpleGraph pent = SimpleGraph::cycle(labels(5));
  CHECK(pent.edge_count() == 5);
  CHECK_FALSE(pent.adjacent(0, 2));
  CHECK(pent.adjacent(0, 1));
  CHECK(pent.adjacent(0, 4));
  CHECK_THROWS_AS(SimpleGraph({"a", "a"}, {}), InvalidInput);
  CHECK_THROWS_AS(SimpleGraph({"a", "b"}, {{0, 0}}), InvalidInput);
  CHECK(SimpleGraph::complete(labels(4)).is_complete());
  CHECK(pent.complement().edge_count() == 5);
}

TEST_CASE("clique poset enumeration") {
  SUBCASE("empty graph on 2 vertices") {
    CliquePoset cp(SimpleGraph::empty_graph(labels(2)));
    CHECK(cp.size() == 3);
  }
  SUBCASE("pentagon") {
    CliquePoset cp(SimpleGraph::cycle(labels(5)));
    CHECK(cp.size() == 11);
  }
  SUBCASE("complete graph on 3 vertices has the full power set") {
    CliquePoset cp(SimpleGraph::complete(labels(3)));
    CHECK(cp.size() == 8);
  }
  SUBCASE("complement of any graph yields the power set") {
    SimpleGraph g({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
    CliquePoset cp(g.complement().complement());
    (void)cp;
    CliquePoset full(SimpleGraph::complete(labels(4)));
    CHECK(full.size() == 16);
  }
  SUBCASE("vertex cap") {
    Limits tight;
    tight.clique_vertex_cap = 3;
    CHECK_THROWS_AS(CliquePoset(SimpleGraph::empty_graph(labels(4)), tight), CapExceeded);
  }
  SUBCASE("full subgraph poset embeds downward-closed") {
    SimpleGraph pent = SimpleGraph::cycle(labels(5));
    SimpleGraph sub = pent.full_subgraph({0, 1, 2});
    CliquePoset cps(sub);
    CliquePoset cpg(pent);
    // every clique of the subgraph (relabeled) is a clique of the pentagon
    for (int i = 0; i < cps.size(); ++i) {
      std::uint32_t mask = cps.mask(i);
      std::uint32_t lifted = 0;
      for (int v = 0; v < 3; ++v)
        if ((mask >> v) & 1u) lifted |= 1u << v;  // vertices 0,1,2 keep their indices
      CHECK_NOTHROW(cpg.index_of(lifted));
    }
  }
}

TEST_CASE("order complexes of clique posets") {
  SUBCASE("one-element poset is a point") {
    SimComplex k = order_complex(1, [](int, int) { return false; }, {"p"});
    CHECK(k.n_vertices() == 1);
    CHECK(k.dimension() == 0);
  }
  SUBCASE("poset of a single edge") {
    SimpleGraph g = SimpleGraph::complete(labels(2));
    CliquePoset cp(g);
    ChainCounts oracle = chain_oracle(cp);
    SimComplex k = order_complex(cp.size(), [&](int a, int b) { return a != b && cp.leq(a, b); },
                                 {"S0", "S1", "S2", "S3"});
    CHECK(k.n_vertices() == 4);
    CHECK(k.count_of_dim(1) == oracle.edges);
    CHECK(k.count_of_dim(2) == oracle.triangles);
    CHECK(k.count_of_dim(1) == 5);
    CHECK(k.count_of_dim(2) == 2);
    // maximal chains run empty < {v} < {v,w}
    CHECK(k.dimension() == 2);
  }
  SUBCASE("poset of the pentagon") {
    CliquePoset cp(SimpleGraph::cycle(labels(5)));
    ChainCounts oracle = chain_oracle(cp);
    std::vector<std::string> names;
    for (int i = 0; i < cp.size(); ++i) names.push_back("S" + std::to_string(i));
    SimComplex k = order_complex(cp.size(), [&](int a, int b) { return a != b && cp.leq(a, b); }, names);
    CHECK(static_cast<std::size_t>(k.n_vertices()) == oracle.vertices);
    CHECK(k.count_of_dim(1) == oracle.edges);
    CHECK(k.count_of_dim(2) == oracle.triangles);
    CHECK(k.n_vertices() == 11);
    CHECK(k.count_of_dim(1) == 20);
    CHECK(k.count_of_dim(2) == 10);
    CHECK(k.dimension() == 2);
  }
}

TEST_CASE("subcomplexes spanned by cliques containing S") {
  SimpleGraph pent = SimpleGraph::cycle(labels(5));
  CliquePoset cp(pent);
  auto sub_elements = [&](std::uint32_t s) {
    std::vector<int> kept;
    for (int i = 0; i < cp.size(); ++i)
      if ((s & ~cp.mask(i)) == 0) kept.push_back(i);
    return kept;
  };
  SUBCASE("S = empty keeps everything") {
    CHECK(sub_elements(0).size() == 11);
  }
  SUBCASE("S = single vertex keeps the vertex and its two edges") {
    CHECK(sub_elements(1u << 0).size() == 3);
  }
  SUBCASE("S maximal keeps a single element") {
    std::uint32_t edge = (1u << 0) | (1u << 1);
    CHECK(sub_elements(edge).size() == 1);
  }
  SUBCASE("the poset of these subcomplexes under reverse inclusion mirrors the clique poset") {
    for (int i = 0; i < cp.size(); ++i)
      for (int j = 0; j < cp.size(); ++j) {
        auto si = sub_elements(cp.mask(i));
        auto sj = sub_elements(cp.mask(j));
        bool reverse_incl = std::includes(si.begin(), si.end(), sj.begin(), sj.end());
        CHECK(reverse_incl == cp.leq(i, j));
      }
  }
}

TEST_CASE("flag property") {
  SUBCASE("order complexes are flag") {
    CliquePoset cp(SimpleGraph::cycle(labels(5)));
    std::vector<std::string> names;
    for (int i = 0; i < cp.size(); ++i) names.push_back("S" + std::to_string(i));
    SimComplex k = order_complex(cp.size(), [&](int a, int b) { return a != b && cp.leq(a, b); }, names);
    CHECK(is_flag(k));
  }
  SUBCASE("hollow triangle is not flag") {
    SimComplex k = SimComplex::from_maximal({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(is_flag(k));
  }
  SUBCASE("filled triangle is flag") {
    SimComplex k = SimComplex::from_maximal({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(is_flag(k));
    CHECK(k.euler_characteristic() == 1);
  }
}
