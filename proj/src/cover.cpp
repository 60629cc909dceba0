#include "gpp/cover.hpp"

#include <algorithm>
#include <set>

#include "gpp/error.hpp"
#include "gpp/linearity.hpp"
#include "gpp/present.hpp"

namespace gpp {

AbelianInvariants vertexwise_abelianization(const PairFamily& fam) {
  AbelianInvariants out;
  std::vector<std::vector<long long>> summands;
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    switch (p.kind) {
      case VKind::FreeZ:
        ++out.free_rank;
        break;
      case VKind::InfDih:
        summands.push_back({2, 2});
        break;
      default:
        summands.push_back(p.group->abelian_invariants());
        break;
    }
  }
  out.torsion = merge_invariant_factors(summands);
  return out;
}

std::vector<GPElement> kernel_sample(const PairFamily& fam, int word_length, const Limits& lim) {
  std::vector<GPElement> kernel;
  for (const GPElement& x : enumerate_ball(fam, word_length, lim))
    if (!x.is_identity() && product_image_trivial(fam, x)) kernel.push_back(x);
  return kernel;
}

CoverReport cover_checks(const PairFamily& fam, int radius, int word_length, const Limits& lim) {
  CoverReport rep;

  // (a) two independent abelianization routes
  rep.presentation_ab = build_presentation(fam).abelianization();
  rep.vertexwise_ab = vertexwise_abelianization(fam);
  rep.abelianization_match = (rep.presentation_ab == rep.vertexwise_ab);

  // (b) the kernel acts freely on the truncated development
  Building b = build_building(fam, radius, lim);
  std::vector<GPElement> ball = enumerate_ball(fam, word_length, lim);
  rep.elements_enumerated = ball.size();
  std::vector<GPElement> kernel;
  for (const GPElement& x : ball)
    if (!x.is_identity() && product_image_trivial(fam, x)) kernel.push_back(x);
  rep.kernel_elements = kernel.size();
  rep.kernel_action_free = true;
  for (const GPElement& k : kernel) {
    for (const BVertex& vert : b.verts) {
      if (fixes_vertex(fam, vert, k)) {
        rep.kernel_action_free = false;
        if (rep.fixed_example.empty())
          rep.fixed_example = element_str(fam, k) + " fixes " + bvertex_str(fam, vert);
        break;
      }
    }
    if (!rep.kernel_action_free) break;
  }

  // kernel of the development action = product of the vertex cores
  std::vector<std::vector<Perm>> cores;
  bool has_core = false;
  for (int v = 0; v < fam.n(); ++v) {
    const VertexPair& p = fam.pair(v);
    if (!p.is_finite()) {
      cores.push_back({});
      continue;
    }
    Subgroup n_v = core(p.group, p.a);
    cores.push_back(std::vector<Perm>(n_v.elements().begin(), n_v.elements().end()));
    if (n_v.order() > 1) has_core = true;
  }
  auto in_cores = [&](const GPElement& x) {
    if (!x.word.empty()) return false;
    for (int v = 0; v < fam.n(); ++v) {
      const VertexPair& p = fam.pair(v);
      if (!p.is_finite()) continue;
      const Perm& a = p.a.elements()[static_cast<std::size_t>(x.apart[static_cast<std::size_t>(v)])];
      const auto& nv = cores[static_cast<std::size_t>(v)];
      if (std::find(nv.begin(), nv.end(), a) == nv.end()) return false;
    }
    return true;
  };
  for (const GPElement& x : ball) {
    bool trivial_action = true;
    for (const BVertex& vert : b.verts)
      if (!fixes_vertex(fam, vert, x)) {
        trivial_action = false;
        break;
      }
    ++rep.action_kernel_checks;
    if (trivial_action != in_cores(x)) {
      rep.action_kernel_matches_cores = false;
      break;
    }
  }
  (void)has_core;

  // (c) infinite-order certificates through the matrix engine; only faithful
  // for families with effective coset actions
  rep.torsion_check_ok = true;
  try {
    if (fam.all_effective()) {
      MatrixEngine engine(fam);
      for (const GPElement& k : kernel) {
        IMat m = engine.element_matrix(k);
        IMat p = m;
        bool grew = false;
        BigInt first = m.max_abs();
        for (int e = 2; e <= 100; ++e) {
          p = p * m;
          if (p.is_identity()) {
            rep.torsion_check_ok = false;
            rep.torsion_failure = element_str(fam, k) + " has a trivial power";
            break;
          }
        }
        if (!rep.torsion_check_ok) break;
        if (p.max_abs() > first) grew = true;
        if (!grew) {
          rep.torsion_check_ok = false;
          rep.torsion_failure = element_str(fam, k) + " shows no entry growth";
          break;
        }
        ++rep.torsion_certified;
      }
      rep.torsion_checked = true;
    } else {
      rep.torsion_checked = false;
    }
  } catch (const HypothesisRefused&) {
    rep.torsion_checked = false;
  }

  rep.ok = rep.abelianization_match && rep.kernel_action_free && rep.action_kernel_matches_cores &&
           (!rep.torsion_checked || rep.torsion_check_ok);
  return rep;
}

}  // namespace gpp
