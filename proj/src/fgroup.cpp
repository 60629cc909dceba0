#include "gpp/fgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "gpp/error.hpp"

namespace gpp {

namespace {

// Closure of a generating set inside the symmetric group, BFS order, with a
// defining word (generator-index sequence) per element.
void bfs_closure(int degree, const std::vector<Perm>& gens, std::size_t cap,
                 std::vector<Perm>& out_elems, std::vector<std::vector<int>>* out_words) {
  std::map<Perm, std::vector<int>> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.emplace(id, std::vector<int>{});
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Perm y = x * gens[gi];
      auto it = seen.find(y);
      if (it != seen.end()) continue;
      std::vector<int> w = seen.at(x);
      w.push_back(static_cast<int>(gi));
      seen.emplace(y, std::move(w));
      queue.push_back(y);
      if (seen.size() > cap)
        throw CapExceeded("group order exceeds enumeration cap " + std::to_string(cap));
    }
  }
  out_elems.clear();
  out_elems.reserve(seen.size());
  for (auto& [p, w] : seen) {
    out_elems.push_back(p);
    if (out_words) out_words->push_back(w);
  }
  // std::map iterates in sorted order, so elements come out canonical.
}

}  // namespace

GroupPtr FiniteGroup::make(int degree, std::vector<Perm> generators, std::string label,
                           const Limits& lim) {
  if (degree < 1) throw InvalidInput("group degree must be positive");
  for (const Perm& p : generators)
    if (p.degree() != degree)
      throw InvalidInput("generator degree " + std::to_string(p.degree()) +
                         " does not match group degree " + std::to_string(degree));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = degree;
  g->gens_ = std::move(generators);
  g->label_ = std::move(label);
  bfs_closure(degree, g->gens_, lim.element_cap, g->elems_, &g->words_);
  return g;
}

GroupPtr FiniteGroup::trivial() { return make(1, {}, "1"); }

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic: n must be >= 1");
  if (n == 1) return trivial();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
  return make(n, {Perm(std::move(img))}, "Z" + std::to_string(n));
}

GroupPtr FiniteGroup::dihedral(int n) {
  if (n < 1) throw InvalidInput("dihedral: n must be >= 1");
  if (n == 1) return make(2, {Perm::from_cycles("(0 1)", 2)}, "D1");
  if (n == 2) return make(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)}, "D2");
  std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    ref[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return make(n, {Perm(std::move(rot)), Perm(std::move(ref))}, "D" + std::to_string(n));
}

GroupPtr FiniteGroup::symmetric(int n) {
  if (n < 1) throw InvalidInput("symmetric: n must be >= 1");
  if (n == 1) return trivial();
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles("(0 1)", n));
  if (n > 2) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.push_back(Perm(std::move(img)));
  }
  return make(n, std::move(gens), "S" + std::to_string(n));
}

bool FiniteGroup::contains(const Perm& p) const {
  return p.degree() == degree_ && std::binary_search(elems_.begin(), elems_.end(), p);
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p) throw InvalidInput("element not in group");
  return static_cast<int>(it - elems_.begin());
}

const Perm& FiniteGroup::identity() const {
  // The identity has the lexicographically least image tuple.
  return elems_.front();
}

const std::vector<int>& FiniteGroup::word_for(int elem_index) const {
  return words_[static_cast<std::size_t>(elem_index)];
}

std::vector<long long> FiniteGroup::abelian_invariants() const {
  // Derived subgroup: closure of generator commutators under conjugation by
  // generators. Then peel invariant factors off the abelian quotient.
  std::set<Perm> derived;
  std::deque<Perm> queue;
  auto add = [&](const Perm& p) {
    if (derived.insert(p).second) queue.push_back(p);
  };
  add(Perm::identity(degree_));
  for (const Perm& a : gens_)
    for (const Perm& b : gens_) add(a * b * a.inverse() * b.inverse());
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const Perm& d : std::vector<Perm>(derived.begin(), derived.end())) {
      add(x * d);
    }
    for (const Perm& s : gens_) add(s * x * s.inverse());
  }

  std::vector<Perm> kernel(derived.begin(), derived.end());
  std::vector<long long> factors;  // collected largest-first
  while (true) {
    std::set<Perm> kset(kernel.begin(), kernel.end());
    // canonical reps of cosets g*kernel
    std::set<Perm> reps;
    for (const Perm& g : elems_) {
      Perm best = g * kernel.front();
      for (const Perm& k : kernel) best = std::min(best, g * k);
      reps.insert(best);
    }
    if (reps.size() == 1) break;
    // order of each coset, pick a maximal one (least rep among maxima)
    long long best_ord = 0;
    Perm best_rep;
    for (const Perm& r : reps) {
      long long ord = 1;
      Perm y = r;
      while (!kset.count(y)) {
        y = y * r;
        ++ord;
      }
      if (ord > best_ord) {
        best_ord = ord;
        best_rep = r;
      }
    }
    factors.push_back(best_ord);
    // enlarge the kernel by the cyclic subgroup generated by best_rep
    std::set<Perm> bigger(kset);
    Perm acc = Perm::identity(degree_);
    for (long long i = 0; i < best_ord; ++i) {
      for (const Perm& k : kernel) bigger.insert(acc * k);
      acc = acc * best_rep;
    }
    kernel.assign(bigger.begin(), bigger.end());
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Perm> generators, const Limits& lim)
    : parent_(std::move(parent)), gens_(std::move(generators)) {
  for (const Perm& p : gens_)
    if (!parent_->contains(p))
      throw InvalidInput("subgroup generator " + p.to_cycles() + " not in parent group");
  bfs_closure(parent_->degree(), gens_, lim.element_cap, elems_, nullptr);
}

bool Subgroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

int Subgroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p) throw InvalidInput("element not in subgroup");
  return static_cast<int>(it - elems_.begin());
}

CosetSpace::CosetSpace(GroupPtr parent, Subgroup sub) : parent_(std::move(parent)), sub_(std::move(sub)) {
  if (sub_.parent() != parent_) {
    // Allow a subgroup constructed over the same group object only.
    for (const Perm& p : sub_.generators())
      if (!parent_->contains(p)) throw InvalidInput("subgroup not contained in group");
  }
  std::map<Perm, int> rep_index;
  for (const Perm& g : parent_->elements()) {
    Perm best = g;
    for (const Perm& a : sub_.elements()) best = std::min(best, g * a);
    rep_index.emplace(best, 0);
  }
  reps_.reserve(rep_index.size());
  for (auto& [r, idx] : rep_index) {
    idx = static_cast<int>(reps_.size());
    reps_.push_back(r);
  }
  if (reps_.size() * sub_.order() != parent_->order())
    throw InternalCheckFailed("coset count times subgroup order != group order");
  // reps_ are sorted; the identity coset rep is the identity, hence point 0.
  table_.assign(parent_->order(), std::vector<int>(reps_.size(), -1));
  for (std::size_t gi = 0; gi < parent_->order(); ++gi) {
    const Perm& g = parent_->elements()[gi];
    for (std::size_t x = 0; x < reps_.size(); ++x) {
      Perm gr = g * reps_[x];
      Perm best = gr;
      for (const Perm& a : sub_.elements()) best = std::min(best, gr * a);
      table_[gi][x] = rep_index.at(best);
    }
  }
}

int CosetSpace::coset_of(const Perm& g) const {
  return act_by_index(parent_->index_of(g), 0);
}

int CosetSpace::act(const Perm& g, int point) const {
  return act_by_index(parent_->index_of(g), point);
}

Subgroup core(const GroupPtr& g, const Subgroup& a) {
  CosetSpace x(g, a);
  std::vector<Perm> kernel_gens;
  for (std::size_t gi = 0; gi < g->order(); ++gi) {
    bool fixes_all = true;
    for (int p = 0; p < x.size(); ++p)
      if (x.act_by_index(static_cast<int>(gi), p) != p) {
        fixes_all = false;
        break;
      }
    if (fixes_all) kernel_gens.push_back(g->elements()[gi]);
  }
  return Subgroup(g, std::move(kernel_gens));
}

FiniteAction FiniteAction::restrict_to(const Subgroup& h, const CosetSpace& x) {
  FiniteAction a;
  a.group = h;
  a.points = x.size();
  a.table.reserve(h.order());
  for (const Perm& e : h.elements()) {
    std::vector<int> row(static_cast<std::size_t>(x.size()));
    for (int p = 0; p < x.size(); ++p) row[static_cast<std::size_t>(p)] = x.act(e, p);
    a.table.push_back(std::move(row));
  }
  return a;
}

std::vector<int> FiniteAction::orbit_sizes() const {
  std::vector<int> comp(static_cast<std::size_t>(points), -1);
  int n_orbits = 0;
  for (int s = 0; s < points; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::deque<int> queue{s};
    comp[static_cast<std::size_t>(s)] = n_orbits;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& row : table) {
        int y = row[static_cast<std::size_t>(x)];
        if (comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = n_orbits;
          queue.push_back(y);
        }
      }
    }
    ++n_orbits;
  }
  std::vector<int> sizes(static_cast<std::size_t>(n_orbits), 0);
  for (int c : comp) ++sizes[static_cast<std::size_t>(c)];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool FiniteAction::is_free() const {
  for (std::size_t hi = 0; hi < table.size(); ++hi) {
    if (group.elements()[hi].is_identity()) continue;
    for (int p = 0; p < points; ++p)
      if (table[hi][static_cast<std::size_t>(p)] == p) return false;
  }
  return true;
}

std::optional<std::vector<Perm>> extend_homomorphism(const FiniteGroup& g,
                                                     const std::vector<Perm>& gen_images) {
  if (gen_images.size() != g.generators().size()) return std::nullopt;
  int tdeg = gen_images.empty() ? 1 : gen_images.front().degree();
  std::vector<Perm> image(g.order(), Perm::identity(tdeg));
  for (std::size_t i = 0; i < g.order(); ++i) {
    Perm acc = Perm::identity(tdeg);
    for (int gi : g.word_for(static_cast<int>(i))) acc = acc * gen_images[static_cast<std::size_t>(gi)];
    image[i] = acc;
  }
  // Consistency over the full Cayley graph proves the map is a homomorphism.
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Perm prod = g.elements()[i] * g.generators()[s];
      int j = g.index_of(prod);
      if (image[static_cast<std::size_t>(j)] != image[i] * gen_images[s]) return std::nullopt;
    }
  }
  return image;
}

ActionIsoReport check_action_iso(const FiniteAction& h_on_x, const FiniteAction& hstar_on_xstar,
                                 ActionIso& iso) {
  ActionIsoReport rep;
  if (h_on_x.points != hstar_on_xstar.points) {
    rep.violation = "point sets have different sizes (" + std::to_string(h_on_x.points) + " vs " +
                    std::to_string(hstar_on_xstar.points) + ")";
    return rep;
  }
  const FiniteGroup& hg = *h_on_x.group.parent();
  (void)hg;
  if (h_on_x.group.order() != hstar_on_xstar.group.order()) {
    rep.violation = "groups have different orders";
    return rep;
  }
  // Build a standalone group on H's elements to extend psi: use the subgroup
  // generators directly.
  auto h_as_group = FiniteGroup::make(h_on_x.group.parent()->degree(), h_on_x.group.generators());
  if (iso.psi_gen_images.size() != h_on_x.group.generators().size()) {
    rep.violation = "generator image list has wrong length";
    return rep;
  }
  std::vector<Perm> gen_imgs;
  for (int idx : iso.psi_gen_images) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= hstar_on_xstar.group.order()) {
      rep.violation = "generator image index out of range";
      return rep;
    }
    gen_imgs.push_back(hstar_on_xstar.group.elements()[static_cast<std::size_t>(idx)]);
  }
  auto full = extend_homomorphism(*h_as_group, gen_imgs);
  if (!full) {
    rep.violation = "generator images do not extend to a homomorphism";
    return rep;
  }
  std::set<Perm> image_set(full->begin(), full->end());
  if (image_set.size() != hstar_on_xstar.group.order()) {
    rep.violation = "psi is not bijective onto the target group";
    return rep;
  }
  // phi bijectivity
  if (iso.phi.size() != static_cast<std::size_t>(h_on_x.points)) {
    rep.violation = "phi has wrong length";
    return rep;
  }
  std::vector<char> used(static_cast<std::size_t>(h_on_x.points), 0);
  for (int y : iso.phi) {
    if (y < 0 || y >= h_on_x.points || used[static_cast<std::size_t>(y)]) {
      rep.violation = "phi is not a bijection of the point sets";
      return rep;
    }
    used[static_cast<std::size_t>(y)] = 1;
  }
  // Equivariance on generators (and hence on all elements).
  for (std::size_t sgi = 0; sgi < h_on_x.group.generators().size(); ++sgi) {
    int h_elem = h_on_x.group.index_of(h_on_x.group.generators()[sgi]);
    int hstar_elem = iso.psi_gen_images[sgi];
    for (int x = 0; x < h_on_x.points; ++x) {
      int lhs = iso.phi[static_cast<std::size_t>(h_on_x.act(h_elem, x))];
      int rhs = hstar_on_xstar.act(hstar_elem, iso.phi[static_cast<std::size_t>(x)]);
      if (lhs != rhs) {
        rep.violation = "equivariance fails at generator #" + std::to_string(sgi) + ", point " +
                        std::to_string(x);
        return rep;
      }
    }
  }
  // Record the element-level map psi, indexed by elements of H.
  iso.psi_elem_map.assign(h_on_x.group.order(), -1);
  for (std::size_t i = 0; i < h_on_x.group.order(); ++i) {
    const Perm& h = h_on_x.group.elements()[i];
    const Perm& img = (*full)[static_cast<std::size_t>(h_as_group->index_of(h))];
    iso.psi_elem_map[i] = hstar_on_xstar.group.index_of(img);
  }
  rep.ok = true;
  return rep;
}

namespace {

bool propagate_phi(const FiniteAction& a, const FiniteAction& b, const std::vector<int>& psi_map,
                   std::vector<int>& phi, std::vector<int>& phi_inv, int x0) {
  std::deque<int> queue{x0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t hi = 0; hi < a.table.size(); ++hi) {
      int hx = a.act(static_cast<int>(hi), x);
      int hy = b.act(psi_map[hi], phi[static_cast<std::size_t>(x)]);
      int& slot = phi[static_cast<std::size_t>(hx)];
      if (slot == -1) {
        if (phi_inv[static_cast<std::size_t>(hy)] != -1) return false;
        slot = hy;
        phi_inv[static_cast<std::size_t>(hy)] = hx;
        queue.push_back(hx);
      } else if (slot != hy) {
        return false;
      }
    }
  }
  return true;
}

bool search_phi(const FiniteAction& a, const FiniteAction& b, const std::vector<int>& psi_map,
                std::vector<int> phi, std::vector<int> phi_inv, std::vector<int>* out) {
  int x = -1;
  for (int i = 0; i < a.points; ++i)
    if (phi[static_cast<std::size_t>(i)] == -1) {
      x = i;
      break;
    }
  if (x == -1) {
    *out = phi;
    return true;
  }
  for (int y = 0; y < b.points; ++y) {
    if (phi_inv[static_cast<std::size_t>(y)] != -1) continue;
    std::vector<int> phi2 = phi, inv2 = phi_inv;
    phi2[static_cast<std::size_t>(x)] = y;
    inv2[static_cast<std::size_t>(y)] = x;
    if (propagate_phi(a, b, psi_map, phi2, inv2, x) &&
        search_phi(a, b, psi_map, std::move(phi2), std::move(inv2), out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<ActionIso> find_action_iso(const FiniteAction& h_on_x, const FiniteAction& hstar_on_xstar,
                                         const Limits& lim) {
  if (h_on_x.points > lim.iso_point_cap || hstar_on_xstar.points > lim.iso_point_cap)
    throw CapExceeded("action-iso search: point set larger than cap " +
                      std::to_string(lim.iso_point_cap));
  if (h_on_x.group.order() > static_cast<std::size_t>(lim.iso_point_cap) ||
      hstar_on_xstar.group.order() > static_cast<std::size_t>(lim.iso_point_cap))
    throw CapExceeded("action-iso search: group order larger than cap " +
                      std::to_string(lim.iso_point_cap));
  if (h_on_x.points != hstar_on_xstar.points) return std::nullopt;
  if (h_on_x.group.order() != hstar_on_xstar.group.order()) return std::nullopt;
  if (h_on_x.orbit_sizes() != hstar_on_xstar.orbit_sizes()) return std::nullopt;

  const auto& gens = h_on_x.group.generators();
  std::vector<int> assignment(gens.size(), -1);

  // Enumerate generator image tuples, then point bijections.
  std::vector<int> candidates;
  for (std::size_t i = 0; i < hstar_on_xstar.group.order(); ++i) candidates.push_back(static_cast<int>(i));

  std::optional<ActionIso> result;
  auto try_assignment = [&](auto&& self, std::size_t pos) -> bool {
    if (result) return true;
    if (pos == gens.size()) {
      ActionIso iso;
      iso.psi_gen_images = assignment;
      auto h_as_group = FiniteGroup::make(h_on_x.group.parent()->degree(), h_on_x.group.generators());
      std::vector<Perm> gen_imgs;
      for (int idx : assignment) gen_imgs.push_back(hstar_on_xstar.group.elements()[static_cast<std::size_t>(idx)]);
      auto full = extend_homomorphism(*h_as_group, gen_imgs);
      if (!full) return false;
      std::set<Perm> image_set(full->begin(), full->end());
      if (image_set.size() != hstar_on_xstar.group.order()) return false;
      std::vector<int> psi_map(h_on_x.group.order());
      for (std::size_t i = 0; i < h_on_x.group.order(); ++i) {
        const Perm& h = h_on_x.group.elements()[i];
        psi_map[i] = hstar_on_xstar.group.index_of((*full)[static_cast<std::size_t>(h_as_group->index_of(h))]);
      }
      std::vector<int> phi(static_cast<std::size_t>(h_on_x.points), -1);
      std::vector<int> phi_inv(static_cast<std::size_t>(h_on_x.points), -1);
      std::vector<int> phi_out;
      if (!search_phi(h_on_x, hstar_on_xstar, psi_map, phi, phi_inv, &phi_out)) return false;
      iso.phi = phi_out;
      ActionIsoReport final_rep = check_action_iso(h_on_x, hstar_on_xstar, iso);
      if (!final_rep.ok) return false;  // should not happen; deny rather than mislead
      result = iso;
      return true;
    }
    for (int c : candidates) {
      assignment[pos] = c;
      if (self(self, pos + 1)) return true;
    }
    assignment[pos] = -1;
    return false;
  };
  try_assignment(try_assignment, 0);
  return result;
}

}  // namespace gpp
