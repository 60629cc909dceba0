#include "gpp/coxeter.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gpp/error.hpp"
#include "gpp/graph.hpp"

namespace gpp {

IMat IMat::identity(int n) {
  IMat m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::operator*(const IMat& rhs) const {
  if (n != rhs.n) throw InvalidInput("matrix dimension mismatch");
  IMat out;
  out.n = n;
  out.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) {
        const BigInt& y = rhs.at(k, j);
        if (y != 0) out.at(i, j) += x * y;
      }
    }
  return out;
}

bool IMat::is_identity() const { return *this == identity(n); }

IMat IMat::pow(long long k) const {
  IMat acc = identity(n);
  for (long long i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

BigInt IMat::max_abs() const {
  BigInt best = 0;
  for (const BigInt& x : a) {
    BigInt v = x < 0 ? BigInt(-x) : x;
    if (v > best) best = v;
  }
  return best;
}

std::string IMat::str() const {
  std::ostringstream out;
  out << n << ":";
  for (const BigInt& x : a) out << x << ";";
  return out.str();
}

void CoxeterMatrix::validate() const {
  if (m.size() != labels.size()) throw InvalidInput("coxeter matrix size mismatch");
  for (int i = 0; i < n(); ++i) {
    if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != n())
      throw InvalidInput("coxeter matrix is not square");
    if (entry(i, i) != 1) throw InvalidInput("coxeter matrix diagonal must be 1");
    for (int j = 0; j < n(); ++j) {
      if (entry(i, j) != entry(j, i)) throw InvalidInput("coxeter matrix must be symmetric");
      if (i != j && entry(i, j) != kInfinity && entry(i, j) < 2)
        throw InvalidInput("off-diagonal coxeter entries must be >= 2 or infinity");
    }
  }
}

bool CoxeterMatrix::is_right_angled() const {
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (entry(i, j) != 2 && entry(i, j) != kInfinity) return false;
  return true;
}

CoxeterMatrix CoxeterMatrix::restricted(const std::vector<int>& gens) const {
  CoxeterMatrix out;
  for (int g : gens) out.labels.push_back(labels[static_cast<std::size_t>(g)]);
  out.m.assign(gens.size(), std::vector<int>(gens.size(), 2));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) out.m[i][j] = entry(gens[i], gens[j]);
  return out;
}

CoxeterMatrix CoxeterMatrix::single(std::string label) {
  CoxeterMatrix out;
  out.labels = {std::move(label)};
  out.m = {{1}};
  return out;
}

CoxeterMatrix CoxeterMatrix::inf_dihedral(std::string s, std::string t) {
  CoxeterMatrix out;
  out.labels = {std::move(s), std::move(t)};
  out.m = {{1, kInfinity}, {kInfinity, 1}};
  return out;
}

CoxeterMatrix CoxeterMatrix::symmetric_group(int points, const std::string& prefix) {
  CoxeterMatrix out;
  int k = points - 1;
  for (int i = 1; i <= k; ++i) out.labels.push_back(prefix + std::to_string(i));
  out.m.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 2));
  for (int i = 0; i < k; ++i) {
    out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (i + 1 < k) {
      out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 3;
      out.m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 3;
    }
  }
  return out;
}

CoxeterMatrix CoxeterMatrix::dihedral(int p, std::string s, std::string t) {
  CoxeterMatrix out;
  out.labels = {std::move(s), std::move(t)};
  out.m = {{1, p}, {p, 1}};
  return out;
}

std::string CoxeterMatrix::text() const {
  std::ostringstream out;
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < n(); ++j) {
      if (j) out << " ";
      out << entry(i, j);
    }
    out << "\n";
  }
  return out.str();
}

CoxeterMatrix coxeter_from_pairs(const SimpleGraph& graph, const std::vector<CoxeterPair>& pairs) {
  if (static_cast<int>(pairs.size()) != graph.n())
    throw InvalidInput("need one coxeter pair per vertex");
  CoxeterMatrix out;
  std::vector<int> offset;
  for (int v = 0; v < graph.n(); ++v) {
    pairs[static_cast<std::size_t>(v)].w.validate();
    for (int g : pairs[static_cast<std::size_t>(v)].parabolic)
      if (g < 0 || g >= pairs[static_cast<std::size_t>(v)].w.n())
        throw InvalidInput("parabolic generator index out of range at vertex " +
                           graph.labels()[static_cast<std::size_t>(v)]);
    offset.push_back(out.n());
    for (const std::string& l : pairs[static_cast<std::size_t>(v)].w.labels)
      out.labels.push_back(graph.labels()[static_cast<std::size_t>(v)] + "." + l);
  }
  int total = out.n();
  out.m.assign(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(total),
                                                                 CoxeterMatrix::kInfinity));
  auto in_parabolic = [&](int v, int local) {
    const auto& par = pairs[static_cast<std::size_t>(v)].parabolic;
    return std::find(par.begin(), par.end(), local) != par.end();
  };
  for (int v = 0; v < graph.n(); ++v) {
    const CoxeterMatrix& wv = pairs[static_cast<std::size_t>(v)].w;
    for (int i = 0; i < wv.n(); ++i)
      for (int j = 0; j < wv.n(); ++j)
        out.m[static_cast<std::size_t>(offset[static_cast<std::size_t>(v)] + i)]
             [static_cast<std::size_t>(offset[static_cast<std::size_t>(v)] + j)] = wv.entry(i, j);
  }
  for (int v = 0; v < graph.n(); ++v)
    for (int w = 0; w < graph.n(); ++w) {
      if (v == w) continue;
      const CoxeterMatrix& wv = pairs[static_cast<std::size_t>(v)].w;
      const CoxeterMatrix& ww = pairs[static_cast<std::size_t>(w)].w;
      for (int i = 0; i < wv.n(); ++i)
        for (int j = 0; j < ww.n(); ++j) {
          int value;
          if (graph.adjacent(v, w))
            value = 2;
          else if (in_parabolic(v, i) || in_parabolic(w, j))
            value = 2;
          else
            value = CoxeterMatrix::kInfinity;
          out.m[static_cast<std::size_t>(offset[static_cast<std::size_t>(v)] + i)]
               [static_cast<std::size_t>(offset[static_cast<std::size_t>(w)] + j)] = value;
        }
    }
  out.validate();
  return out;
}

TitsRep tits_rep(const CoxeterMatrix& matrix) {
  matrix.validate();
  int n = matrix.n();
  TitsRep rep;
  rep.matrix = matrix;
  for (int s = 0; s < n; ++s) {
    IMat g = IMat::identity(n);
    for (int t = 0; t < n; ++t) {
      int mm = matrix.entry(s, t);
      long long minus2b;  // -2B(e_s,e_t)
      if (s == t)
        minus2b = -2;
      else if (mm == 2)
        minus2b = 0;
      else if (mm == 3)
        minus2b = 1;
      else if (mm == CoxeterMatrix::kInfinity)
        minus2b = 2;
      else
        throw InvalidInput("reflection representation supports entries 2, 3 and infinity; got " +
                           std::to_string(mm));
      if (s == t)
        g.at(s, s) = -1;
      else if (minus2b != 0)
        g.at(s, t) = minus2b;
    }
    rep.gen.push_back(std::move(g));
  }
  // verify relations exactly
  for (int s = 0; s < n; ++s)
    if (!(rep.gen[static_cast<std::size_t>(s)] * rep.gen[static_cast<std::size_t>(s)]).is_identity())
      throw InternalCheckFailed("reflection generator is not an involution");
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      IMat prod = rep.gen[static_cast<std::size_t>(s)] * rep.gen[static_cast<std::size_t>(t)];
      int mm = matrix.entry(s, t);
      if (mm == CoxeterMatrix::kInfinity) {
        IMat p = prod;
        BigInt first_norm = prod.max_abs();
        for (int k = 2; k <= 50; ++k) {
          p = p * prod;
          if (p.is_identity()) throw InternalCheckFailed("infinite-order product has a trivial power");
        }
        if (!(p.max_abs() > first_norm))
          throw InternalCheckFailed("infinite-order product shows no entry growth");
      } else {
        if (!prod.pow(mm).is_identity())
          throw InternalCheckFailed("braid relation fails in the reflection representation");
      }
    }
  return rep;
}

IMat TitsRep::word_matrix(const std::vector<int>& word) const {
  IMat acc = IMat::identity(matrix.n());
  for (int g : word) acc = acc * gen.at(static_cast<std::size_t>(g));
  return acc;
}

namespace {

// Enumerate the elements of a Coxeter group through its reflection matrices;
// returns words (in generator indices) keyed by matrix. Throws CapExceeded
// when the group has more elements than the cap.
std::map<std::string, std::vector<int>> enumerate_by_matrices(const TitsRep& rep, std::size_t cap) {
  std::map<std::string, std::vector<int>> seen;
  std::vector<std::pair<IMat, std::vector<int>>> frontier{{IMat::identity(rep.matrix.n()), {}}};
  seen.emplace(frontier.front().first.str(), std::vector<int>{});
  while (!frontier.empty()) {
    std::vector<std::pair<IMat, std::vector<int>>> next;
    for (auto& [m, w] : frontier) {
      for (int g = 0; g < rep.matrix.n(); ++g) {
        IMat m2 = m * rep.gen[static_cast<std::size_t>(g)];
        std::string key = m2.str();
        if (seen.count(key)) continue;
        std::vector<int> w2 = w;
        w2.push_back(g);
        seen.emplace(key, w2);
        next.emplace_back(std::move(m2), std::move(w2));
        if (seen.size() > cap) throw CapExceeded("parabolic subgroup is not finite within cap");
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

void reduce_involution_word(std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

}  // namespace

std::vector<int> rho_apply(const Orthoparabolic& op, const std::vector<int>& word) {
  std::vector<int> out;
  for (int g : word)
    if (op.rho[static_cast<std::size_t>(g)] >= 0) out.push_back(op.rho[static_cast<std::size_t>(g)]);
  reduce_involution_word(out);
  return out;
}

std::optional<Orthoparabolic> orthoparabolic_find(const CoxeterMatrix& w,
                                                  const std::vector<int>& parabolic) {
  w.validate();
  for (int g : parabolic)
    if (g < 0 || g >= w.n()) throw InvalidInput("parabolic generator index out of range");

  std::vector<char> in_par(static_cast<std::size_t>(w.n()), 0);
  for (int g : parabolic) in_par[static_cast<std::size_t>(g)] = 1;

  CoxeterMatrix pmat = w.restricted(parabolic);
  TitsRep prep = tits_rep(pmat);
  // image of generator g as a parabolic matrix; candidates -1 (identity) or
  // a position in `parabolic`
  auto image_matrix = [&](int cand) {
    return cand < 0 ? IMat::identity(pmat.n()) : prep.gen[static_cast<std::size_t>(cand)];
  };

  std::vector<int> free_slots;
  for (int g = 0; g < w.n(); ++g)
    if (!in_par[static_cast<std::size_t>(g)]) free_slots.push_back(g);

  std::vector<int> rho(static_cast<std::size_t>(w.n()), -1);
  for (std::size_t i = 0; i < parabolic.size(); ++i)
    rho[static_cast<std::size_t>(parabolic[i])] = static_cast<int>(i);

  auto relations_hold = [&]() {
    for (int i = 0; i < w.n(); ++i)
      for (int j = i + 1; j < w.n(); ++j) {
        int mm = w.entry(i, j);
        if (mm == CoxeterMatrix::kInfinity) continue;
        IMat prod = image_matrix(rho[static_cast<std::size_t>(i)]) *
                    image_matrix(rho[static_cast<std::size_t>(j)]);
        if (!prod.pow(mm).is_identity()) return false;
      }
    return true;
  };

  std::optional<Orthoparabolic> found;
  auto assign = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == free_slots.size()) {
      if (!relations_hold()) return false;
      Orthoparabolic op;
      op.w = w;
      op.parabolic = parabolic;
      op.rho = rho;
      found = op;
      return true;
    }
    // identity first, then parabolic generators in order
    for (int cand = -1; cand < static_cast<int>(parabolic.size()); ++cand) {
      rho[static_cast<std::size_t>(free_slots[pos])] = cand;
      if (self(self, pos + 1)) return true;
    }
    rho[static_cast<std::size_t>(free_slots[pos])] = -1;
    return false;
  };
  assign(assign, 0);
  if (!found) return std::nullopt;

  // Kernel Schreier generators when the parabolic is finite: the parabolic
  // itself is a transversal of the kernel (the retraction splits).
  try {
    auto elems = enumerate_by_matrices(prep, 20000);
    found->parabolic_order = elems.size();
    std::vector<std::vector<int>> schreier;
    std::set<std::vector<int>> dedup;
    for (const auto& [key, pword_local] : elems) {
      // lift the parabolic word into W's generators
      std::vector<int> lift;
      for (int loc : pword_local) lift.push_back(parabolic[static_cast<std::size_t>(loc)]);
      for (int s = 0; s < w.n(); ++s) {
        std::vector<int> word = lift;
        word.push_back(s);
        // overline(ps): the transversal element of rho(p s) = p * rho(s)
        std::vector<int> image_local = pword_local;
        if (found->rho[static_cast<std::size_t>(s)] >= 0)
          image_local.push_back(found->rho[static_cast<std::size_t>(s)]);
        // canonical word of that parabolic element
        IMat img = prep.word_matrix(image_local);
        const std::vector<int>& canon = elems.at(img.str());
        for (auto it = canon.rbegin(); it != canon.rend(); ++it)
          word.push_back(parabolic[static_cast<std::size_t>(*it)]);
        reduce_involution_word(word);
        if (!word.empty() && dedup.insert(word).second) schreier.push_back(word);
      }
    }
    found->kernel_schreier = std::move(schreier);
    found->kernel_computed = true;
  } catch (const CapExceeded&) {
    found->kernel_computed = false;
  }
  return found;
}

EvenSubgroup even_subgroup(const CoxeterMatrix& m) {
  m.validate();
  EvenSubgroup out;
  for (int j = 1; j < m.n(); ++j) out.gens.emplace_back(0, j);
  return out;
}

DinftySubgroupData dinfty_subgroups(const CoxeterMatrix& w, int n) {
  w.validate();
  if (!w.is_right_angled()) throw InvalidInput("this construction needs a right-angled matrix");
  if (n < 1) throw InvalidInput("index must be >= 1");
  DinftySubgroupData data;
  data.n = n;
  for (int i = 0; i < w.n() && data.s_gen < 0; ++i)
    for (int j = i + 1; j < w.n(); ++j)
      if (w.entry(i, j) == CoxeterMatrix::kInfinity) {
        data.s_gen = i;
        data.t_gen = j;
        break;
      }
  if (data.s_gen < 0)
    throw HypothesisRefused(
        "the group is finite (every generator pair commutes); no infinite dihedral parabolic "
        "exists");

  auto lift_dih = [&](const DihElem& d) {
    std::vector<int> word;
    for (int x : d.st_word()) word.push_back(x == 0 ? data.s_gen : data.t_gen);
    return word;
  };

  DihElem s = DihElem::s(), t = DihElem::t();
  DihElem tau = s * t;  // unit translation
  std::vector<DihElem> kgens;
  if (n == 1) {
    kgens = {s, t};
  } else if (n % 2 == 0) {
    long long k = n / 2;
    kgens = {s, dih_pow(tau, k) * s * dih_pow(tau, -k)};
  } else {
    long long k = (n - 1) / 2;
    kgens = {s, dih_pow(tau, -k) * t * dih_pow(tau, k)};
  }
  data.k = DihSubgroup::generated_by(kgens);
  for (const DihElem& g : kgens) data.subgroup_gens.push_back(lift_dih(g));
  data.verified_index = static_cast<long long>(dih_coset_reps(data.k).size());

  // Reidemeister-Schreier generators of the preimage under the retraction
  // r (s_gen -> s, t_gen -> t, others -> identity). Right-coset transversal
  // of K in the dihedral parabolic, lifted along the splitting.
  std::vector<DihElem> left = dih_coset_reps(data.k);
  std::vector<DihElem> reps;
  for (const DihElem& r : left) reps.push_back(r.inverse());  // right-coset reps
  auto retract = [&](int g) -> DihElem {
    if (g == data.s_gen) return s;
    if (g == data.t_gen) return t;
    return DihElem::identity();
  };
  auto rep_of = [&](const DihElem& x) -> const DihElem& {
    for (const DihElem& r : reps)
      if (data.k.contains(x * r.inverse())) return r;
    throw InternalCheckFailed("coset representative not found");
  };
  std::set<std::vector<int>> dedup;
  for (const DihElem& r : reps) {
    std::vector<int> rword = lift_dih(r);
    for (int g = 0; g < w.n(); ++g) {
      DihElem target = r * retract(g);
      const DihElem& bar = rep_of(target);
      std::vector<int> word = rword;
      word.push_back(g);
      std::vector<int> barw = lift_dih(bar);
      for (auto it = barw.rbegin(); it != barw.rend(); ++it) word.push_back(*it);
      reduce_involution_word(word);
      if (!word.empty() && dedup.insert(word).second) data.preimage_schreier.push_back(word);
    }
  }
  return data;
}

bool dinfty_sub_contains(const CoxeterMatrix& w, const DinftySubgroupData& data,
                         const std::vector<int>& word) {
  DihElem acc = DihElem::identity();
  for (int g : word) {
    if (g < 0 || g >= w.n()) throw InvalidInput("generator index out of range");
    if (g == data.s_gen)
      acc = acc * DihElem::s();
    else if (g == data.t_gen)
      acc = acc * DihElem::t();
  }
  return data.k.contains(acc);
}

}  // namespace gpp
