#include "gpp/family.hpp"

#include <atomic>

#include "gpp/error.hpp"

namespace gpp {

bool velem_is_identity(const VElem& e) {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Perm>)
          return x.is_identity();
        else if constexpr (std::is_same_v<T, long long>)
          return x == 0;
        else
          return x.is_identity();
      },
      e);
}

std::string velem_str(const VElem& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Perm>)
          return x.to_cycles();
        else if constexpr (std::is_same_v<T, long long>)
          return std::to_string(x);
        else
          return x.str();
      },
      e);
}

VertexPair VertexPair::finite(GroupPtr g, std::vector<Perm> a_gens) {
  VertexPair p;
  p.kind = VKind::Finite;
  p.group = std::move(g);
  p.a = Subgroup(p.group, std::move(a_gens));
  p.cosets = CosetSpace(p.group, p.a);
  return p;
}

VertexPair VertexPair::free_z() {
  VertexPair p;
  p.kind = VKind::FreeZ;
  return p;
}

VertexPair VertexPair::inf_dihedral() {
  VertexPair p;
  p.kind = VKind::InfDih;
  return p;
}

long long VertexPair::coset_count() const {
  return is_finite() ? cosets.size() : 0;
}

long long VertexPair::group_order() const {
  return is_finite() ? static_cast<long long>(group->order()) : 0;
}

std::string VertexPair::describe() const {
  switch (kind) {
    case VKind::FreeZ:
      return "Z (trivial subgroup)";
    case VKind::InfDih:
      return "Dinfty (trivial subgroup)";
    default:
      return (group->label().empty() ? "group of order " + std::to_string(group->order())
                                     : group->label()) +
             ", subgroup of order " + std::to_string(a.order());
  }
}

VElem VertexPair::identity() const {
  switch (kind) {
    case VKind::FreeZ:
      return VElem(static_cast<long long>(0));
    case VKind::InfDih:
      return VElem(DihElem::identity());
    default:
      return VElem(Perm::identity(group->degree()));
  }
}

VElem VertexPair::mult(const VElem& x, const VElem& y) const {
  switch (kind) {
    case VKind::FreeZ:
      return VElem(std::get<long long>(x) + std::get<long long>(y));
    case VKind::InfDih:
      return VElem(std::get<DihElem>(x) * std::get<DihElem>(y));
    default:
      return VElem(std::get<Perm>(x) * std::get<Perm>(y));
  }
}

VElem VertexPair::inverse(const VElem& x) const {
  switch (kind) {
    case VKind::FreeZ:
      return VElem(-std::get<long long>(x));
    case VKind::InfDih:
      return VElem(std::get<DihElem>(x).inverse());
    default:
      return VElem(std::get<Perm>(x).inverse());
  }
}

bool VertexPair::contains(const VElem& x) const {
  switch (kind) {
    case VKind::FreeZ:
      return std::holds_alternative<long long>(x);
    case VKind::InfDih:
      return std::holds_alternative<DihElem>(x);
    default:
      return std::holds_alternative<Perm>(x) && group->contains(std::get<Perm>(x));
  }
}

bool VertexPair::in_subgroup(const VElem& x) const {
  if (!is_finite()) return velem_is_identity(x);
  return a.contains(std::get<Perm>(x));
}

std::vector<VElem> VertexPair::group_generators() const {
  switch (kind) {
    case VKind::FreeZ:
      return {VElem(static_cast<long long>(1)), VElem(static_cast<long long>(-1))};
    case VKind::InfDih:
      return {VElem(DihElem::s()), VElem(DihElem::t())};
    default: {
      std::vector<VElem> out;
      for (const Perm& g : group->generators())
        if (!g.is_identity()) out.emplace_back(g);
      return out;
    }
  }
}

std::vector<VElem> VertexPair::subgroup_generators() const {
  if (!is_finite()) return {};
  std::vector<VElem> out;
  for (const Perm& g : a.generators())
    if (!g.is_identity()) out.emplace_back(g);
  return out;
}

namespace {
std::uint64_t next_family_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace

PairFamily::PairFamily(SimpleGraph graph, std::vector<VertexPair> pairs, const Limits& lim)
    : graph_(std::move(graph)), pairs_(std::move(pairs)), id_(next_family_id()) {
  if (static_cast<int>(pairs_.size()) != graph_.n())
    throw InvalidInput("family needs exactly one group pair per vertex");
  cliques_ = CliquePoset(graph_, lim);
}

bool PairFamily::all_finite() const {
  for (const auto& p : pairs_)
    if (!p.is_finite()) return false;
  return true;
}

bool PairFamily::all_effective() const {
  for (const auto& p : pairs_) {
    if (!p.is_finite()) continue;  // both presets act effectively on themselves
    if (core(p.group, p.a).order() != 1) return false;
  }
  return true;
}

PairFamily PairFamily::along_complete_graph() const {
  return PairFamily(SimpleGraph::complete(graph_.labels()), pairs_);
}

}  // namespace gpp
