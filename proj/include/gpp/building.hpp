#pragma once

#include <map>
#include <string>
#include <vector>

#include "gpp/scomplex.hpp"
#include "gpp/words.hpp"

namespace gpp {

/// A vertex of the development: the coset (element * G_S), identified by the
/// clique S and the canonical representative word.
struct BVertex {
  int clique = 0;
  Word word;
  auto operator<=>(const BVertex&) const = default;
};

/// Truncated development of the family over its clique poset: all cosets
/// g*G_S whose canonical representative has word length at most the radius,
/// with one simplex per flag of nested cosets. Chambers are the vertices of
/// empty type.
class Building {
 public:
  int radius = 0;
  bool cap_hit = false;  // vertex cap reached; result is partial
  std::vector<BVertex> verts;          // sorted
  std::vector<std::pair<int, int>> edges;
  std::vector<Word> chambers;          // canonical element words, sorted

  int index_of(const BVertex& v) const;          // -1 if absent
  int base() const;                              // vertex [e, empty]
  std::size_t count_of_clique(int clique) const;
  const std::map<BVertex, int>& vertex_index() const { return index_; }

  /// Simplicial complex with all flags materialized; every maximal clique of
  /// the comparability graph is validated to contain a common coset element.
  SimComplex to_complex(const PairFamily& fam) const;

  friend Building build_building(const PairFamily& fam, int radius, const Limits& lim);

 private:
  std::map<BVertex, int> index_;
};

/// BFS over coset representatives; requires every coset space finite.
Building build_building(const PairFamily& fam, int radius, const Limits& lim = Limits::defaults());

struct StabilizerReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t image_outside_radius = 0;  // informational
  std::string first_mismatch;
};

/// Verifies, for every vertex [h,S] of the truncated building, that g fixes
/// [h,S] exactly when h^-1 g h lies in G_S (the isotropy law).
StabilizerReport stabilizer_check(const PairFamily& fam, const Building& b, const GPElement& g);

/// True iff g fixes the vertex.
bool fixes_vertex(const PairFamily& fam, const BVertex& vert, const GPElement& g);

std::string bvertex_str(const PairFamily& fam, const BVertex& v);

}  // namespace gpp
