#include "gpp/building.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "gpp/error.hpp"

namespace gpp {

int Building::index_of(const BVertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int Building::base() const {
  BVertex b;
  b.clique = 0;  // the empty clique is poset element 0
  int id = index_of(b);
  if (id < 0) throw InternalCheckFailed("building has no base vertex");
  return id;
}

std::size_t Building::count_of_clique(int clique) const {
  std::size_t n = 0;
  for (const BVertex& v : verts)
    if (v.clique == clique) ++n;
  return n;
}

Building build_building(const PairFamily& fam, int radius, const Limits& lim) {
  if (radius < 0 || radius > lim.radius_cap)
    throw CapExceeded("radius " + std::to_string(radius) + " exceeds cap " +
                      std::to_string(lim.radius_cap));
  for (int v = 0; v < fam.n(); ++v)
    if (!fam.pair(v).is_finite())
      throw HypothesisRefused(
          "truncated development needs finite coset spaces at every vertex; vertex " +
          fam.graph().labels()[static_cast<std::size_t>(v)] + " is an infinite preset");

  Building b;
  b.radius = radius;

  // All canonical element words of length <= radius, by BFS on right
  // multiplication with nontrivial coset letters.
  std::set<Word> words;
  std::deque<GPElement> queue;
  GPElement id = identity_element(fam);
  words.insert(id.word);
  queue.push_back(id);
  while (!queue.empty()) {
    GPElement x = queue.front();
    queue.pop_front();
    for (int v = 0; v < fam.n(); ++v) {
      const VertexPair& p = fam.pair(v);
      for (int pt = 1; pt < p.cosets.size(); ++pt) {
        GPElement y = mul_letter(fam, x, v, VElem(p.cosets.rep(pt)));
        if (y.length() > radius) continue;
        GPElement clean = element_of_word(fam, y.word);
        if (words.insert(clean.word).second) queue.push_back(clean);
        if (words.size() > lim.complex_vertex_cap) {
          b.cap_hit = true;
          queue.clear();
          break;
        }
      }
      if (b.cap_hit) break;
    }
  }
  b.chambers.assign(words.begin(), words.end());

  const CliquePoset& cp = fam.cliques();
  for (const Word& w : b.chambers) {
    GPElement g = element_of_word(fam, w);
    for (int s = 0; s < cp.size(); ++s) {
      BVertex vert{s, coset_word(fam, g, cp.mask(s))};
      if (b.index_.emplace(vert, 0).second && b.index_.size() > lim.complex_vertex_cap) {
        b.cap_hit = true;
        break;
      }
    }
    if (b.cap_hit) break;
  }
  b.verts.reserve(b.index_.size());
  for (auto& [vert, id2] : b.index_) {
    id2 = static_cast<int>(b.verts.size());
    b.verts.push_back(vert);
  }

  // Edges: each vertex joins the larger coset it sits inside, per superclique.
  for (std::size_t i = 0; i < b.verts.size(); ++i) {
    const BVertex& vert = b.verts[i];
    GPElement g = element_of_word(fam, vert.word);
    for (int s = 0; s < cp.size(); ++s) {
      if (s == vert.clique) continue;
      if (!cp.leq(vert.clique, s)) continue;  // need S strictly inside S'
      BVertex up{s, coset_word(fam, g, cp.mask(s))};
      int j = b.index_of(up);
      if (j >= 0) b.edges.emplace_back(static_cast<int>(i), j);
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

SimComplex Building::to_complex(const PairFamily& fam) const {
  const CliquePoset& cp = fam.cliques();
  int n = static_cast<int>(verts.size());
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [a, bb] : edges)
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(bb)] =
        adj[static_cast<std::size_t>(bb)][static_cast<std::size_t>(a)] = 1;

  std::vector<std::vector<int>> maximal;
  auto expand = [&](auto&& self, std::vector<int>& clique, int last) -> void {
    bool extended = false;
    for (int v = last + 1; v < n; ++v) {
      bool ok = true;
      for (int u : clique)
        if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      extended = true;
      clique.push_back(v);
      self(self, clique, v);
      clique.pop_back();
    }
    if (!extended && !clique.empty()) maximal.push_back(clique);
  };
  std::vector<int> clique;
  expand(expand, clique, -1);

  // Flags must share a coset element: the smallest-type coset's representative
  // must project onto every member.
  for (const auto& simplex : maximal) {
    std::vector<int> sorted = simplex;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int bb) {
      return std::popcount(cp.mask(verts[static_cast<std::size_t>(a)].clique)) <
             std::popcount(cp.mask(verts[static_cast<std::size_t>(bb)].clique));
    });
    GPElement g = element_of_word(fam, verts[static_cast<std::size_t>(sorted.front())].word);
    for (int id : sorted) {
      const BVertex& vert = verts[static_cast<std::size_t>(id)];
      if (coset_word(fam, g, cp.mask(vert.clique)) != vert.word)
        throw InternalCheckFailed("flag of cosets without a common element");
    }
  }

  std::vector<std::string> labels;
  for (const BVertex& v : verts) labels.push_back(bvertex_str(fam, v));
  return SimComplex::from_maximal(std::move(labels), maximal);
}

bool fixes_vertex(const PairFamily& fam, const BVertex& vert, const GPElement& g) {
  GPElement h = element_of_word(fam, vert.word);
  GPElement gh = multiply(fam, g, h);
  return coset_word(fam, gh, fam.cliques().mask(vert.clique)) == vert.word;
}

StabilizerReport stabilizer_check(const PairFamily& fam, const Building& b, const GPElement& g) {
  StabilizerReport rep;
  const CliquePoset& cp = fam.cliques();
  for (const BVertex& vert : b.verts) {
    GPElement h = element_of_word(fam, vert.word);
    GPElement gh = multiply(fam, g, h);
    Word image = coset_word(fam, gh, cp.mask(vert.clique));
    bool fixed = (image == vert.word);
    if (static_cast<int>(image.size()) > b.radius) ++rep.image_outside_radius;
    // independent route: h^-1 g h in G_S
    GPElement conj = multiply(fam, inverse(fam, h), gh);
    bool in_gs = supported_on(fam, conj, cp.mask(vert.clique));
    ++rep.checked;
    if (fixed != in_gs) {
      ++rep.mismatches;
      if (rep.first_mismatch.empty()) rep.first_mismatch = bvertex_str(fam, vert);
    }
  }
  return rep;
}

std::string bvertex_str(const PairFamily& fam, const BVertex& v) {
  return "[" + word_str(fam, v.word) + " | " + fam.cliques().label(v.clique, fam.graph()) + "]";
}

}  // namespace gpp
