#include "gpp/commensure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gpp/error.hpp"

namespace gpp {

HSpec HSpec::whole_group(const VertexPair& p) {
  HSpec h;
  if (p.is_finite()) {
    h.gens = p.group->generators();
  } else {
    h.z_modulus = 1;
    h.dih = DihSubgroup::whole();
  }
  return h;
}

HSpec HSpec::trivial_subgroup() { return HSpec{}; }

CommInstance::CommInstance(PairFamily fam, PairFamily fam_star, std::vector<HSpec> h,
                           std::vector<HSpec> h_star)
    : fam_(std::move(fam)), fam_star_(std::move(fam_star)), h_(std::move(h)), h_star_(std::move(h_star)) {
  if (fam_.graph().labels() != fam_star_.graph().labels() ||
      fam_.graph().edges() != fam_star_.graph().edges())
    throw InvalidInput("both families must live over the same graph");
  if (static_cast<int>(h_.size()) != fam_.n() || static_cast<int>(h_star_.size()) != fam_.n())
    throw InvalidInput("need one subgroup per vertex on each side");
}

namespace {

bool is_dih_style(const HSpec& spec) { return spec.dih.has_reflections; }

}  // namespace

void CommInstance::prepare(const Limits& lim) {
  h_sub_.assign(static_cast<std::size_t>(n()), Subgroup{});
  h_sub_star_.assign(static_cast<std::size_t>(n()), Subgroup{});
  isos_.assign(static_cast<std::size_t>(n()), ActionIso{});
  for (int v = 0; v < n(); ++v) {
    const VertexPair& p = fam_.pair(v);
    const VertexPair& ps = fam_star_.pair(v);
    const std::string& name = fam_.graph().labels()[static_cast<std::size_t>(v)];
    if (p.is_finite() != ps.is_finite())
      throw HypothesisRefused("coset spaces at vertex " + name +
                              " cannot be equivariantly isomorphic: one is finite, one infinite");
    if (p.is_finite()) {
      h_sub_[static_cast<std::size_t>(v)] = Subgroup(p.group, h_[static_cast<std::size_t>(v)].gens);
      h_sub_star_[static_cast<std::size_t>(v)] = Subgroup(ps.group, h_star_[static_cast<std::size_t>(v)].gens);
      FiniteAction act = FiniteAction::restrict_to(h_sub_[static_cast<std::size_t>(v)], p.cosets);
      FiniteAction act_star =
          FiniteAction::restrict_to(h_sub_star_[static_cast<std::size_t>(v)], ps.cosets);
      auto iso = find_action_iso(act, act_star, lim);
      if (!iso)
        throw HypothesisRefused(
            "no equivariant isomorphism exists between the subgroup actions on the coset spaces "
            "at vertex " +
            name);
      ActionIsoReport check = check_action_iso(act, act_star, *iso);
      if (!check.ok) throw InternalCheckFailed("searched isomorphism failed validation: " + check.violation);
      isos_[static_cast<std::size_t>(v)] = *iso;
    } else {
      long long idx = index_of_h(v), idx_star = index_of_h_star(v);
      if (idx <= 0 || idx_star <= 0)
        throw HypothesisRefused("subgroup at vertex " + name + " has infinite index");
      if (idx != idx_star)
        throw HypothesisRefused("regular subgroup actions at vertex " + name +
                                " have different orbit counts (" + std::to_string(idx) + " vs " +
                                std::to_string(idx_star) + ")");
      bool dih_a = p.kind == VKind::InfDih ? is_dih_style(h_spec(v)) : false;
      bool dih_b = ps.kind == VKind::InfDih ? is_dih_style(h_spec_star(v)) : false;
      if (dih_a != dih_b)
        throw HypothesisRefused("subgroups at vertex " + name +
                                " are not isomorphic (infinite cyclic vs infinite dihedral)");
    }
  }
  prepared_ = true;
}

long long CommInstance::index_of_h(int v) const {
  const VertexPair& p = fam_.pair(v);
  switch (p.kind) {
    case VKind::FreeZ:
      return h_[static_cast<std::size_t>(v)].z_modulus;
    case VKind::InfDih:
      return h_[static_cast<std::size_t>(v)].dih.index_in_whole();
    default: {
      Subgroup sub = prepared_ ? h_sub_[static_cast<std::size_t>(v)]
                               : Subgroup(p.group, h_[static_cast<std::size_t>(v)].gens);
      return static_cast<long long>(p.group->order() / sub.order());
    }
  }
}

long long CommInstance::index_of_h_star(int v) const {
  const VertexPair& p = fam_star_.pair(v);
  switch (p.kind) {
    case VKind::FreeZ:
      return h_star_[static_cast<std::size_t>(v)].z_modulus;
    case VKind::InfDih:
      return h_star_[static_cast<std::size_t>(v)].dih.index_in_whole();
    default: {
      Subgroup sub = prepared_ ? h_sub_star_[static_cast<std::size_t>(v)]
                               : Subgroup(p.group, h_star_[static_cast<std::size_t>(v)].gens);
      return static_cast<long long>(p.group->order() / sub.order());
    }
  }
}

bool CommInstance::h_contains(int v, const VElem& g) const {
  const VertexPair& p = fam_.pair(v);
  switch (p.kind) {
    case VKind::FreeZ:
      return std::get<long long>(g) % h_[static_cast<std::size_t>(v)].z_modulus == 0;
    case VKind::InfDih:
      return h_[static_cast<std::size_t>(v)].dih.contains(std::get<DihElem>(g));
    default:
      return h_sub_[static_cast<std::size_t>(v)].contains(std::get<Perm>(g));
  }
}

bool CommInstance::h_star_contains(int v, const VElem& g) const {
  const VertexPair& p = fam_star_.pair(v);
  switch (p.kind) {
    case VKind::FreeZ:
      return std::get<long long>(g) % h_star_[static_cast<std::size_t>(v)].z_modulus == 0;
    case VKind::InfDih:
      return h_star_[static_cast<std::size_t>(v)].dih.contains(std::get<DihElem>(g));
    default:
      return h_sub_star_[static_cast<std::size_t>(v)].contains(std::get<Perm>(g));
  }
}

Perm CommInstance::psi(int v, const Perm& h_elem) const {
  const Subgroup& sub = h_sub_[static_cast<std::size_t>(v)];
  const Subgroup& sub_star = h_sub_star_[static_cast<std::size_t>(v)];
  int idx = sub.index_of(h_elem);
  int img = isos_[static_cast<std::size_t>(v)].psi_elem_map[static_cast<std::size_t>(idx)];
  return sub_star.elements()[static_cast<std::size_t>(img)];
}

namespace {

std::vector<VElem> transversal_for(const VertexPair& p, const HSpec& spec, const Subgroup& sub) {
  std::vector<VElem> out;
  switch (p.kind) {
    case VKind::FreeZ: {
      for (long long r = 0; r < spec.z_modulus; ++r) out.emplace_back(r);
      return out;
    }
    case VKind::InfDih: {
      for (const DihElem& d : dih_coset_reps(spec.dih)) out.emplace_back(d);
      return out;
    }
    default: {
      std::set<Perm> reps;
      for (const Perm& g : p.group->elements()) {
        Perm best = g;
        for (const Perm& h : sub.elements()) best = std::min(best, g * h);
        reps.insert(best);
      }
      for (const Perm& r : reps) out.emplace_back(r);
      return out;  // sorted; identity first
    }
  }
}

VElem coset_rep_for(const VertexPair& p, const HSpec& spec, const Subgroup& sub, const VElem& g) {
  switch (p.kind) {
    case VKind::FreeZ: {
      long long n = spec.z_modulus;
      long long x = std::get<long long>(g) % n;
      if (x < 0) x += n;
      return VElem(x);
    }
    case VKind::InfDih: {
      const DihElem& d = std::get<DihElem>(g);
      for (const DihElem& r : dih_coset_reps(spec.dih))
        if (spec.dih.contains(r.inverse() * d)) return VElem(r);
      throw InternalCheckFailed("dihedral coset representative not found");
    }
    default: {
      const Perm& gp = std::get<Perm>(g);
      Perm best = gp;
      for (const Perm& h : sub.elements()) best = std::min(best, gp * h);
      return VElem(best);
    }
  }
}

}  // namespace

std::vector<VElem> CommInstance::h_transversal(int v) const {
  return transversal_for(fam_.pair(v), h_[static_cast<std::size_t>(v)], h_sub_[static_cast<std::size_t>(v)]);
}

std::vector<VElem> CommInstance::h_transversal_star(int v) const {
  return transversal_for(fam_star_.pair(v), h_star_[static_cast<std::size_t>(v)],
                         h_sub_star_[static_cast<std::size_t>(v)]);
}

VElem CommInstance::h_coset_rep(int v, const VElem& g) const {
  return coset_rep_for(fam_.pair(v), h_[static_cast<std::size_t>(v)], h_sub_[static_cast<std::size_t>(v)], g);
}

VElem CommInstance::h_coset_rep_star(int v, const VElem& g) const {
  return coset_rep_for(fam_star_.pair(v), h_star_[static_cast<std::size_t>(v)],
                       h_sub_star_[static_cast<std::size_t>(v)], g);
}

std::vector<GPElement> preimage_schreier(const CommInstance& inst, bool starred, const Limits& lim) {
  const PairFamily& fam = starred ? inst.family_star() : inst.family();
  int n = fam.n();

  // product transversal as an odometer
  std::vector<std::vector<VElem>> trans;
  long long total = 1;
  for (int v = 0; v < n; ++v) {
    trans.push_back(starred ? inst.h_transversal_star(v) : inst.h_transversal(v));
    total *= static_cast<long long>(trans.back().size());
    if (total > static_cast<long long>(lim.complex_vertex_cap))
      throw CapExceeded("product transversal too large");
  }

  auto lift = [&](const std::vector<std::size_t>& idx) {
    RawWord raw;
    for (int v = 0; v < n; ++v) {
      const VElem& r = trans[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]];
      if (!velem_is_identity(r)) raw.emplace_back(v, r);
    }
    return normalize(fam, raw);
  };

  auto rep_tuple_lift = [&](const std::vector<VElem>& omega) {
    RawWord raw;
    for (int v = 0; v < n; ++v) {
      VElem r = starred ? inst.h_coset_rep_star(v, omega[static_cast<std::size_t>(v)])
                        : inst.h_coset_rep(v, omega[static_cast<std::size_t>(v)]);
      if (!velem_is_identity(r)) raw.emplace_back(v, r);
    }
    return normalize(fam, raw);
  };

  auto in_product_h = [&](const GPElement& x) {
    std::vector<VElem> omega = product_image(fam, x);
    for (int v = 0; v < n; ++v) {
      bool inside = starred ? inst.h_star_contains(v, omega[static_cast<std::size_t>(v)])
                            : inst.h_contains(v, omega[static_cast<std::size_t>(v)]);
      if (!inside) return false;
    }
    return true;
  };

  RawWord alphabet = generator_alphabet(fam);
  std::set<GPElement> gens;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    GPElement t = lift(idx);
    for (const auto& [v, s] : alphabet) {
      GPElement z = mul_letter(fam, t, v, s);
      GPElement bar = rep_tuple_lift(product_image(fam, z));
      GPElement gen = multiply(fam, inverse(fam, bar), z);
      if (!gen.is_identity()) {
        if (!in_product_h(gen))
          throw InternalCheckFailed("Schreier generator fails the projection membership test");
        gens.insert(gen);
      }
    }
    // advance odometer
    int v = n - 1;
    while (v >= 0) {
      std::size_t vi = static_cast<std::size_t>(v);
      if (++idx[vi] < trans[vi].size()) break;
      idx[vi] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return std::vector<GPElement>(gens.begin(), gens.end());
}

CommWitness common_subgroup(CommInstance& inst, const Limits& lim) {
  if (!inst.prepared()) inst.prepare(lim);
  CommWitness w;
  for (int v = 0; v < inst.n(); ++v) {
    w.index *= inst.index_of_h(v);
    w.index_star *= inst.index_of_h_star(v);
  }
  // exactness cross-check in the finite case: the index computed from the
  // direct product orders must agree
  if (inst.all_finite()) {
    long long big = 1, small = 1, big_star = 1, small_star = 1;
    for (int v = 0; v < inst.n(); ++v) {
      big *= inst.family().pair(v).group_order();
      small *= static_cast<long long>(inst.h_subgroup(v).order());
      big_star *= inst.family_star().pair(v).group_order();
      small_star *= static_cast<long long>(inst.h_subgroup_star(v).order());
    }
    if (w.index != big / small || w.index_star != big_star / small_star)
      throw InternalCheckFailed("index bookkeeping mismatch");
  }
  w.reduced_flag = inst.family().all_effective() && inst.family_star().all_effective();
  w.schreier = preimage_schreier(inst, false, lim);
  w.schreier_star = preimage_schreier(inst, true, lim);
  return w;
}

namespace {

struct ChamberLift {
  std::map<Word, Word> map;  // chamber word -> chamber word
  bool consistency_ok = true;
  std::string failure;
  int first_fail_depth = -1;
};

// Lift the coordinatewise bijections phi to chambers of the truncated
// developments, BFS from the base. For valid inputs this is globally
// consistent; any disagreement on a revisited chamber is recorded.
ChamberLift lift_chambers(const PairFamily& fam, const PairFamily& fs, const Building& b,
                          const std::vector<std::vector<int>>& phi, int margin) {
  ChamberLift lift;
  int n = fam.n();

  // base image: coordinates phi_v(0)
  RawWord base_raw;
  for (int v = 0; v < n; ++v) {
    int x = phi[static_cast<std::size_t>(v)][0];
    if (x != 0) base_raw.emplace_back(v, VElem(fs.pair(v).cosets.rep(x)));
  }
  GPElement base_img = normalize(fs, base_raw);
  lift.map.emplace(Word{}, base_img.word);

  std::deque<Word> queue{Word{}};
  while (!queue.empty()) {
    Word cw = queue.front();
    queue.pop_front();
    GPElement g = element_of_word(fam, cw);
    GPElement gs = element_of_word(fs, lift.map.at(cw));
    std::vector<VElem> omega = product_image(fam, g);
    std::vector<VElem> omega_star = product_image(fs, gs);
    for (int v = 0; v < n; ++v) {
      const VertexPair& p = fam.pair(v);
      const VertexPair& pstar = fs.pair(v);
      const Perm& wv = std::get<Perm>(omega[static_cast<std::size_t>(v)]);
      Perm wv_star_inv = std::get<Perm>(omega_star[static_cast<std::size_t>(v)]).inverse();
      for (int pt = 1; pt < p.cosets.size(); ++pt) {
        GPElement d = mul_letter(fam, g, v, VElem(p.cosets.rep(pt)));
        if (static_cast<int>(d.word.size()) > margin) continue;
        int x_d = p.cosets.act(wv, pt);
        int x_star = phi[static_cast<std::size_t>(v)][static_cast<std::size_t>(x_d)];
        int p_star = pstar.cosets.act(wv_star_inv, x_star);
        GPElement ds = mul_letter(fs, gs, v, VElem(pstar.cosets.rep(p_star)));
        auto it = lift.map.find(d.word);
        if (it == lift.map.end()) {
          lift.map.emplace(d.word, ds.word);
          queue.push_back(d.word);
        } else if (it->second != ds.word) {
          lift.consistency_ok = false;
          if (lift.first_fail_depth < 0) {
            lift.first_fail_depth = static_cast<int>(d.word.size());
            lift.failure = "chamber lift disagrees at " + word_str(fam, d.word);
          }
        }
      }
    }
  }
  (void)b;
  return lift;
}

// Vertex map induced by a chamber lift; records any anchor-independence
// failure.
bool induced_vertex_map(const PairFamily& fam, const PairFamily& fs, const Building& b,
                        const ChamberLift& lift, std::map<BVertex, BVertex>& vmap,
                        std::string& failure) {
  const CliquePoset& cp = fam.cliques();
  const CliquePoset& cps = fs.cliques();
  if (cp.size() != cps.size()) {
    failure = "clique posets differ";
    return false;
  }
  for (const Word& cw : b.chambers) {
    auto it = lift.map.find(cw);
    if (it == lift.map.end()) continue;
    GPElement g = element_of_word(fam, cw);
    GPElement gs = element_of_word(fs, it->second);
    for (int s = 0; s < cp.size(); ++s) {
      BVertex key{s, coset_word(fam, g, cp.mask(s))};
      BVertex img{s, coset_word(fs, gs, cps.mask(s))};
      auto [pos, fresh] = vmap.emplace(key, img);
      if (!fresh && pos->second != img) {
        failure = "vertex image depends on the anchor chamber at " + bvertex_str(fam, key);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

BuildingIsoReport building_iso_only(const PairFamily& fam, const PairFamily& fam_star, int radius,
                                    const Limits& lim) {
  BuildingIsoReport rep;
  for (int v = 0; v < fam.n(); ++v) {
    if (!fam.pair(v).is_finite() || !fam_star.pair(v).is_finite())
      throw HypothesisRefused("truncated developments need finite coset spaces");
    if (fam.pair(v).coset_count() != fam_star.pair(v).coset_count())
      throw HypothesisRefused(
          "coset counts differ at vertex " + fam.graph().labels()[static_cast<std::size_t>(v)] +
          " (" + std::to_string(fam.pair(v).coset_count()) + " vs " +
          std::to_string(fam_star.pair(v).coset_count()) + "); the developments cannot match");
  }
  if (fam.graph().labels() != fam_star.graph().labels() ||
      fam.graph().edges() != fam_star.graph().edges())
    throw InvalidInput("both families must live over the same graph");

  Limits wide = lim;
  wide.radius_cap = std::max(lim.radius_cap, radius);
  Building b = build_building(fam, radius, wide);
  Building bs = build_building(fam_star, radius, wide);

  std::vector<std::vector<int>> phi;
  for (int v = 0; v < fam.n(); ++v) {
    std::vector<int> id(static_cast<std::size_t>(fam.pair(v).coset_count()));
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    phi.push_back(std::move(id));
  }
  ChamberLift lift = lift_chambers(fam, fam_star, b, phi, radius);
  if (!lift.consistency_ok) {
    rep.failure = lift.failure;
    return rep;
  }
  std::map<BVertex, BVertex> vmap;
  if (!induced_vertex_map(fam, fam_star, b, lift, vmap, rep.failure)) return rep;

  // bijectivity and adjacency on the full truncation
  std::set<BVertex> images;
  for (const auto& [key, img] : vmap) {
    if (bs.index_of(img) < 0) {
      rep.failure = "image vertex missing from the target development";
      return rep;
    }
    if (!images.insert(img).second) {
      rep.failure = "two vertices share an image";
      return rep;
    }
  }
  if (vmap.size() != b.verts.size() || images.size() != bs.verts.size()) {
    rep.failure = "vertex counts differ (" + std::to_string(vmap.size()) + " vs " +
                  std::to_string(bs.verts.size()) + ")";
    return rep;
  }
  std::set<std::pair<int, int>> target_edges(bs.edges.begin(), bs.edges.end());
  for (auto [a, c] : b.edges) {
    int x = bs.index_of(vmap.at(b.verts[static_cast<std::size_t>(a)]));
    int y = bs.index_of(vmap.at(b.verts[static_cast<std::size_t>(c)]));
    if (!target_edges.count({std::min(x, y), std::max(x, y)})) {
      rep.failure = "edge image is not an edge";
      return rep;
    }
    ++rep.edges_checked;
  }
  if (rep.edges_checked != target_edges.size()) {
    rep.failure = "edge counts differ";
    return rep;
  }
  for (const auto& [key, img] : vmap) rep.vertex_map.emplace_back(key, img);
  rep.verts_mapped = vmap.size();
  rep.ok = true;
  return rep;
}

EquivIsoReport equivariant_building_iso(CommInstance& inst, int radius, const Limits& lim) {
  EquivIsoReport rep;
  rep.radius = radius;
  if (!inst.prepared()) inst.prepare(lim);
  if (!inst.all_finite())
    throw HypothesisRefused("truncated developments need finite coset spaces on both sides");
  const PairFamily& fam = inst.family();
  const PairFamily& fs = inst.family_star();

  std::vector<GPElement> gens = preimage_schreier(inst, false, lim);
  int max_gen = 1;
  for (const GPElement& g : gens) max_gen = std::max(max_gen, g.length());
  int margin = radius + std::max(1, max_gen);
  rep.margin_radius = margin;

  Limits wide = lim;
  wide.radius_cap = std::max(lim.radius_cap, margin);
  Building b = build_building(fam, margin, wide);
  Building bs = build_building(fs, margin, wide);
  if (b.cap_hit || bs.cap_hit) throw CapExceeded("margin development exceeded the vertex cap");

  std::vector<std::vector<int>> phi;
  for (int v = 0; v < inst.n(); ++v) phi.push_back(inst.iso(v).phi);
  ChamberLift lift = lift_chambers(fam, fs, b, phi, margin);
  rep.consistency_ok = lift.consistency_ok;
  rep.chambers_mapped = lift.map.size();
  if (!lift.consistency_ok) {
    rep.failure = lift.failure;
    rep.first_violation_radius = lift.first_fail_depth;
    return rep;
  }
  std::map<BVertex, BVertex> vmap;
  if (!induced_vertex_map(fam, fs, b, lift, vmap, rep.failure)) {
    rep.consistency_ok = false;
    rep.first_violation_radius = 0;
    return rep;
  }

  // radius-r bijectivity
  std::set<BVertex> images;
  std::size_t in_radius = 0, target_in_radius = 0;
  for (const BVertex& v : b.verts)
    if (static_cast<int>(v.word.size()) <= radius) {
      ++in_radius;
      const BVertex& img = vmap.at(v);
      if (bs.index_of(img) < 0 || !images.insert(img).second) {
        rep.failure = "vertex map is not injective into the target truncation";
        return rep;
      }
      rep.vertex_map.emplace_back(v, img);
    }
  for (const BVertex& v : bs.verts)
    if (static_cast<int>(v.word.size()) <= radius) ++target_in_radius;
  if (in_radius != target_in_radius) {
    rep.failure = "radius-" + std::to_string(radius) + " vertex counts differ";
    return rep;
  }

  // transported generators
  GPElement tstar = element_of_word(fs, lift.map.at(Word{}));
  std::vector<VElem> omega_t = product_image(fs, tstar);
  for (const GPElement& h : gens) {
    auto it = lift.map.find(h.word);
    if (it == lift.map.end()) {
      rep.failure = "a Schreier generator's chamber lies outside the margin";
      return rep;
    }
    GPElement ustar = element_of_word(fs, it->second);
    std::vector<VElem> omega_u = product_image(fs, ustar);
    std::vector<VElem> omega_h = product_image(fam, h);
    RawWord a_parts;
    for (int v = 0; v < inst.n(); ++v) {
      const VertexPair& ps = fs.pair(v);
      Perm hv = std::get<Perm>(omega_h[static_cast<std::size_t>(v)]);
      if (!inst.h_subgroup(v).contains(hv)) throw InternalCheckFailed("generator leaves the vertex subgroup");
      Perm target = inst.psi(v, hv);
      Perm a = std::get<Perm>(omega_u[static_cast<std::size_t>(v)]).inverse() * target *
               std::get<Perm>(omega_t[static_cast<std::size_t>(v)]);
      if (!ps.a.contains(a)) {
        rep.failure = "transport of a generator does not normalize the base chamber";
        return rep;
      }
      if (!a.is_identity()) a_parts.emplace_back(v, VElem(a));
    }
    GPElement hstar = multiply(fs, multiply(fs, ustar, normalize(fs, a_parts)), inverse(fs, tstar));
    rep.transported_gens.emplace_back(h, hstar);
  }

  // equivariance verification over all radius-r vertices
  const CliquePoset& cp = fam.cliques();
  const CliquePoset& cps = fs.cliques();
  std::vector<std::pair<BVertex, BVertex>> by_length = rep.vertex_map;
  std::sort(by_length.begin(), by_length.end(), [](const auto& a, const auto& c) {
    return a.first.word.size() < c.first.word.size();
  });
  for (const auto& [h, hstar] : rep.transported_gens) {
    for (const auto& [x, x_img] : by_length) {
      GPElement moved = multiply(fam, h, element_of_word(fam, x.word));
      Word moved_word = coset_word(fam, moved, cp.mask(x.clique));
      if (static_cast<int>(moved_word.size()) > margin) {
        ++rep.skipped;
        continue;
      }
      auto lhs_it = vmap.find(BVertex{x.clique, moved_word});
      if (lhs_it == vmap.end()) {
        ++rep.skipped;
        continue;
      }
      GPElement moved_star = multiply(fs, hstar, element_of_word(fs, x_img.word));
      BVertex rhs{x.clique, coset_word(fs, moved_star, cps.mask(x.clique))};
      ++rep.checks;
      if (lhs_it->second != rhs) {
        ++rep.violations;
        if (rep.first_violation_radius < 0)
          rep.first_violation_radius = static_cast<int>(x.word.size());
      }
    }
  }
  rep.skipped_fraction =
      rep.checks + rep.skipped == 0
          ? 0.0
          : static_cast<double>(rep.skipped) / static_cast<double>(rep.checks + rep.skipped);
  rep.ok = rep.consistency_ok && rep.violations == 0 && rep.skipped_fraction < 0.30;
  return rep;
}

Cor561Report cor561_scenario(const PairFamily& fam, const PairFamily& fam_star, int radius,
                             const Limits& lim) {
  Cor561Report rep;
  for (int v = 0; v < fam.n(); ++v)
    if (!fam.pair(v).is_finite() || !fam_star.pair(v).is_finite())
      throw HypothesisRefused(
          "the actions are properly discontinuous only when every vertex group is finite; vertex " +
          fam.graph().labels()[static_cast<std::size_t>(v)] + " is infinite");
  rep.properly_discontinuous = true;
  rep.locally_finite = true;  // finite coset counts everywhere, checked below

  rep.buildings = building_iso_only(fam, fam_star, radius, lim);
  if (!rep.buildings.ok) {
    rep.failure = rep.buildings.failure;
    return rep;
  }

  Limits wide = lim;
  wide.radius_cap = std::max(lim.radius_cap, radius);
  Building b = build_building(fam, radius, wide);
  std::vector<long long> degree(b.verts.size(), 0);
  for (auto [x, y] : b.edges) {
    ++degree[static_cast<std::size_t>(x)];
    ++degree[static_cast<std::size_t>(y)];
  }
  for (long long d : degree) rep.max_vertex_degree = std::max(rep.max_vertex_degree, d);

  const CliquePoset& cp = fam.cliques();
  for (int s = 0; s < cp.size(); ++s) {
    long long stab = 1, stab_star = 1;
    for (int v = 0; v < fam.n(); ++v) {
      bool inside = (cp.mask(s) >> v) & 1u;
      stab *= inside ? fam.pair(v).group_order() : static_cast<long long>(fam.pair(v).a.order());
      stab_star *= inside ? fam_star.pair(v).group_order()
                          : static_cast<long long>(fam_star.pair(v).a.order());
    }
    rep.max_stabilizer_order = std::max(rep.max_stabilizer_order, stab);
    rep.max_stabilizer_order_star = std::max(rep.max_stabilizer_order_star, stab_star);
  }

  for (int v = 0; v < fam.n(); ++v) {
    rep.common_index *= fam.pair(v).group_order();
    rep.common_index_star *= fam_star.pair(v).group_order();
  }
  rep.ok = true;
  return rep;
}

}  // namespace gpp
