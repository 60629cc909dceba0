#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gpp/fgroup.hpp"
#include "gpp/graph.hpp"
#include "gpp/presets.hpp"

namespace gpp {

/// Element of a vertex group: a permutation for finite groups, an integer
/// for Z, a DihElem for the infinite dihedral group.
using VElem = std::variant<Perm, long long, DihElem>;

bool velem_is_identity(const VElem& e);
std::string velem_str(const VElem& e);

enum class VKind { Finite, FreeZ, InfDih };

/// One vertex datum: a group together with a subgroup of it. For the two
/// infinite presets the subgroup is trivial and the coset space is the group
/// itself.
struct VertexPair {
  VKind kind = VKind::Finite;
  GroupPtr group;     // finite case
  Subgroup a;         // finite case
  CosetSpace cosets;  // finite case; identity coset is point 0

  static VertexPair finite(GroupPtr g, std::vector<Perm> a_gens);
  static VertexPair free_z();
  static VertexPair inf_dihedral();

  bool is_finite() const { return kind == VKind::Finite; }
  /// [G : A]; 0 when infinite.
  long long coset_count() const;
  /// |G|; 0 when infinite.
  long long group_order() const;
  std::string describe() const;

  VElem identity() const;
  VElem mult(const VElem& x, const VElem& y) const;
  VElem inverse(const VElem& x) const;
  bool contains(const VElem& x) const;   // membership in the vertex group
  bool in_subgroup(const VElem& x) const;
  std::vector<VElem> group_generators() const;
  std::vector<VElem> subgroup_generators() const;
};

/// A finite graph together with a pair (A_v <= G_v) per vertex: the input to
/// every construction in this library. Immutable; each instance carries a
/// unique id used to stamp elements.
class PairFamily {
 public:
  PairFamily(SimpleGraph graph, std::vector<VertexPair> pairs,
             const Limits& lim = Limits::defaults());

  const SimpleGraph& graph() const { return graph_; }
  const VertexPair& pair(int v) const { return pairs_[static_cast<std::size_t>(v)]; }
  int n() const { return graph_.n(); }
  std::uint64_t id() const { return id_; }
  const CliquePoset& cliques() const { return cliques_; }
  bool adjacent(int v, int w) const { return graph_.adjacent(v, w); }
  bool all_finite() const;
  bool all_effective() const;  // each G_v acts effectively on G_v/A_v

  /// Same pairs along the complete graph on the same vertex set.
  PairFamily along_complete_graph() const;

 private:
  SimpleGraph graph_;
  std::vector<VertexPair> pairs_;
  CliquePoset cliques_;
  std::uint64_t id_;
};

}  // namespace gpp
