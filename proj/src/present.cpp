#include "gpp/present.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gpp/error.hpp"

namespace gpp {

namespace {

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// Cayley-graph relators of a finite group over its own generators: one
// relator per non-tree edge, using the BFS spanning tree stored with the
// enumeration. The resulting set generates the full kernel of the free group
// onto the group.
std::vector<std::vector<int>> cayley_relators(const FiniteGroup& g, int index_offset) {
  std::vector<std::vector<int>> rels;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      int j = g.index_of(g.elements()[i] * g.generators()[s]);
      // tree edge iff word(j) == word(i) + [s]
      const auto& wi = g.word_for(static_cast<int>(i));
      const auto& wj = g.word_for(j);
      if (wj.size() == wi.size() + 1 && std::equal(wi.begin(), wi.end(), wj.begin()) &&
          wj.back() == static_cast<int>(s))
        continue;
      std::vector<int> rel;
      for (int x : wi) rel.push_back(index_offset + x + 1);
      rel.push_back(index_offset + static_cast<int>(s) + 1);
      for (int x : inverse_word([&] {
             std::vector<int> tmp;
             for (int y : wj) tmp.push_back(index_offset + y + 1);
             return tmp;
           }()))
        rel.push_back(x);
      free_reduce(rel);
      if (!rel.empty() && seen.insert(rel).second) rels.push_back(rel);
    }
  }
  return rels;
}

}  // namespace

std::vector<std::vector<int>> Presentation::all_relators() const {
  std::vector<std::vector<int>> out = vertex_relators;
  out.insert(out.end(), commutator_relators.begin(), commutator_relators.end());
  return out;
}

std::string Presentation::relator_str(const std::vector<int>& w) const {
  // Recognize [x,y] for single-generator commutators.
  if (w.size() == 4 && w[0] > 0 && w[1] > 0 && w[2] == -w[0] && w[3] == -w[1])
    return "[" + gens[static_cast<std::size_t>(w[0] - 1)].name + "," +
           gens[static_cast<std::size_t>(w[1] - 1)].name + "]";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!first) out << " ";
    out << gens[static_cast<std::size_t>(std::abs(w[i]) - 1)].name;
    if (e != 1) out << "^" << e;
    first = false;
    i = j;
  }
  return out.str();
}

std::string Presentation::text() const {
  std::ostringstream out;
  out << "generators:";
  for (const Gen& g : gens) out << " " << g.name;
  out << "\n";
  for (const auto& r : vertex_relators) out << relator_str(r) << "\n";
  for (const auto& r : commutator_relators) out << relator_str(r) << "\n";
  return out.str();
}

std::vector<std::vector<BigInt>> Presentation::relation_matrix() const {
  std::vector<std::vector<BigInt>> m;
  for (const auto& r : all_relators()) {
    std::vector<BigInt> row(gens.size(), 0);
    for (int x : r) row[static_cast<std::size_t>(std::abs(x) - 1)] += (x > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants Presentation::abelianization() const {
  return abelian_from_relations(relation_matrix(), static_cast<int>(gens.size()));
}

Presentation build_presentation(const PairFamily& fam) {
  Presentation p;
  std::vector<int> offset(static_cast<std::size_t>(fam.n()), 0);
  for (int v = 0; v < fam.n(); ++v) {
    offset[static_cast<std::size_t>(v)] = static_cast<int>(p.gens.size());
    const VertexPair& vp = fam.pair(v);
    const std::string& label = fam.graph().labels()[static_cast<std::size_t>(v)];
    switch (vp.kind) {
      case VKind::FreeZ:
        p.gens.push_back({label, v});
        break;
      case VKind::InfDih:
        p.gens.push_back({label + "_s", v});
        p.gens.push_back({label + "_t", v});
        break;
      default: {
        std::size_t k = vp.group->generators().size();
        for (std::size_t i = 0; i < k; ++i)
          p.gens.push_back({k == 1 ? label : label + "_" + std::to_string(i + 1), v});
        break;
      }
    }
  }

  // vertex relators
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& vp = fam.pair(v);
    int off = offset[static_cast<std::size_t>(v)];
    switch (vp.kind) {
      case VKind::FreeZ:
        break;
      case VKind::InfDih:
        p.vertex_relators.push_back({off + 1, off + 1});
        p.vertex_relators.push_back({off + 2, off + 2});
        break;
      default:
        for (auto& r : cayley_relators(*vp.group, off)) p.vertex_relators.push_back(std::move(r));
        break;
    }
  }

  // Words over a vertex's generator indices for its subgroup generators.
  auto subgroup_gen_words = [&](int v) {
    std::vector<std::vector<int>> words;
    const VertexPair& vp = fam.pair(v);
    if (vp.kind != VKind::Finite) return words;  // presets carry trivial subgroups
    int off = offset[static_cast<std::size_t>(v)];
    for (const Perm& a : vp.a.generators()) {
      if (a.is_identity()) continue;
      std::vector<int> w;
      for (int x : vp.group->word_for(vp.group->index_of(a))) w.push_back(off + x + 1);
      words.push_back(std::move(w));
    }
    return words;
  };

  auto vertex_gen_indices = [&](int v) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < p.gens.size(); ++i)
      if (p.gens[i].vertex == v) idx.push_back(static_cast<int>(i) + 1);
    return idx;
  };

  std::set<std::vector<int>> seen;
  auto add_commutator = [&](const std::vector<int>& u, const std::vector<int>& w) {
    std::vector<int> rel = u;
    rel.insert(rel.end(), w.begin(), w.end());
    auto iu = inverse_word(u), iw = inverse_word(w);
    rel.insert(rel.end(), iu.begin(), iu.end());
    rel.insert(rel.end(), iw.begin(), iw.end());
    free_reduce(rel);
    if (!rel.empty() && seen.insert(rel).second) p.commutator_relators.push_back(rel);
  };

  for (int v = 0; v < fam.n(); ++v) {
    for (int w = v + 1; w < fam.n(); ++w) {
      if (fam.adjacent(v, w)) {
        for (int s : vertex_gen_indices(v))
          for (int t : vertex_gen_indices(w)) add_commutator({s}, {t});
      } else {
        for (int s : vertex_gen_indices(v))
          for (const auto& sigma : subgroup_gen_words(w)) add_commutator({s}, sigma);
        for (const auto& sigma : subgroup_gen_words(v))
          for (int t : vertex_gen_indices(w)) add_commutator(sigma, {t});
      }
    }
  }
  return p;
}

Presentation pi1_presentation(const SimComplex& complex, int base_vertex) {
  int n = complex.n_vertices();
  if (base_vertex < 0 || base_vertex >= n) throw InvalidInput("base vertex out of range");
  auto edges = complex.edges();

  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    nbr[static_cast<std::size_t>(a)].push_back(b);
    nbr[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& l : nbr) std::sort(l.begin(), l.end());

  // BFS spanning tree in canonical vertex order
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  parent[static_cast<std::size_t>(base_vertex)] = -1;
  std::deque<int> queue{base_vertex};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : nbr[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
  }
  for (int v = 0; v < n; ++v)
    if (parent[static_cast<std::size_t>(v)] == -2)
      throw InvalidInput("complex is disconnected; fundamental group needs a connected complex");

  auto is_tree_edge = [&](int a, int b) {
    return parent[static_cast<std::size_t>(a)] == b || parent[static_cast<std::size_t>(b)] == a;
  };

  Presentation p;
  std::map<std::pair<int, int>, int> gen_of_edge;  // oriented (a<b) -> 1-based index
  for (auto [a, b] : edges) {
    if (is_tree_edge(a, b)) continue;
    gen_of_edge[{a, b}] = static_cast<int>(p.gens.size()) + 1;
    p.gens.push_back({"e" + std::to_string(a) + "_" + std::to_string(b), -1});
  }

  // signed generator of the oriented edge a->b; 0 for tree edges
  auto edge_gen = [&](int a, int b) -> int {
    auto it = gen_of_edge.find({std::min(a, b), std::max(a, b)});
    if (it == gen_of_edge.end()) return 0;
    return a < b ? it->second : -it->second;
  };

  for (const auto& tri : complex.triangles()) {
    std::vector<int> rel;
    int verts[3] = {tri[0], tri[1], tri[2]};
    int path[3][2] = {{verts[0], verts[1]}, {verts[1], verts[2]}, {verts[2], verts[0]}};
    for (auto& e : path) {
      int g = edge_gen(e[0], e[1]);
      if (g != 0) rel.push_back(g);
    }
    free_reduce(rel);
    if (!rel.empty()) p.vertex_relators.push_back(rel);
  }
  return p;
}

}  // namespace gpp
