#include "gpp/presets.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "gpp/error.hpp"

namespace gpp {

std::string DihElem::str() const {
  if (is_identity()) return "e";
  std::string out;
  if (flip && shift == 0) return "s";
  out = "(" + std::to_string(shift) + (flip ? ",r)" : ",+)");
  return out;
}

std::vector<int> DihElem::st_word() const {
  // s = (0,1), t = (-1,1), st = (1,0). Translations (n,0) are (st)^n for
  // n > 0 and (ts)^-n for n < 0; reflections are translation * s.
  std::vector<int> w;
  long long n = shift;
  if (flip) {
    // (n,1) = (n,0)*(0,1)
    DihElem tr{n, 0};
    w = tr.st_word();
    w.push_back(0);  // s
    return w;
  }
  if (n > 0) {
    for (long long i = 0; i < n; ++i) {
      w.push_back(0);
      w.push_back(1);
    }
  } else {
    for (long long i = 0; i < -n; ++i) {
      w.push_back(1);
      w.push_back(0);
    }
  }
  return w;
}

DihElem dih_pow(DihElem base, long long n) {
  DihElem acc = DihElem::identity();
  bool invert = n < 0;
  if (invert) n = -n;
  for (long long i = 0; i < n; ++i) acc = acc * base;
  return invert ? acc.inverse() : acc;
}

DihSubgroup DihSubgroup::generated_by(const std::vector<DihElem>& gens) {
  long long lattice = 0;
  bool has_refl = false;
  long long refl = 0;
  // Translations in the subgroup: from translation generators and from
  // products of reflection generators with a fixed one.
  const DihElem* first_refl = nullptr;
  for (const DihElem& g : gens) {
    if (g.flip) {
      if (!first_refl) {
        first_refl = &g;
        has_refl = true;
        refl = g.shift;
      }
    }
  }
  for (const DihElem& g : gens) {
    if (!g.flip) {
      lattice = std::gcd(lattice, g.shift);
    } else {
      // g * first_refl is a translation in the subgroup
      lattice = std::gcd(lattice, (g * first_refl->inverse()).shift);
    }
  }
  if (has_refl && lattice != 0) refl = ((refl % lattice) + lattice) % lattice;
  return {lattice, has_refl, refl};
}

bool DihSubgroup::contains(const DihElem& g) const {
  if (!g.flip) {
    if (g.shift == 0) return true;
    return lattice != 0 && g.shift % lattice == 0;
  }
  if (!has_reflections) return false;
  if (lattice == 0) return g.shift == refl_shift;
  return ((g.shift - refl_shift) % lattice) == 0;
}

long long DihSubgroup::index_in_whole() const {
  if (lattice == 0) return 0;  // infinite
  return has_reflections ? lattice : 2 * lattice;
}

std::vector<DihElem> dih_coset_reps(const DihSubgroup& k) {
  if (k.index_in_whole() == 0) throw InvalidInput("coset enumeration of an infinite-index subgroup");
  // BFS over left multiplication by s and t; a coset gK is identified by
  // membership of h^-1 g in K against previously seen representatives.
  std::vector<DihElem> reps;
  std::deque<DihElem> queue{DihElem::identity()};
  auto find_coset = [&](const DihElem& g) -> bool {
    for (const DihElem& r : reps)
      if (k.contains(r.inverse() * g)) return true;
    return false;
  };
  while (!queue.empty()) {
    DihElem g = queue.front();
    queue.pop_front();
    if (find_coset(g)) continue;
    reps.push_back(g);
    queue.push_back(DihElem::s() * g);
    queue.push_back(DihElem::t() * g);
    if (reps.size() > 1'000'000) throw CapExceeded("coset enumeration runaway");
  }
  return reps;
}

}  // namespace gpp
