#include "gpp/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace gpp {

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  std::vector<BigInt> diag;

  while (t < rows && t < cols) {
    // locate a minimal nonzero entry in the remaining block
    std::size_t pr = t, pc = t;
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (!found || big_abs(m[i][j]) < best)) {
          best = big_abs(m[i][j]);
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than pivot; swap up and redo
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(big_abs(m[t][t]));
    ++t;
  }

  // repair the divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        BigInt g = gcd(diag[i], diag[j]);
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  std::sort(diag.begin(), diag.end());
  return diag;
}

AbelianInvariants abelian_from_relations(const std::vector<std::vector<BigInt>>& m, int n_generators) {
  AbelianInvariants out;
  std::vector<BigInt> diag = smith_invariant_factors(m);
  out.free_rank = n_generators - static_cast<int>(diag.size());
  for (const BigInt& d : diag)
    if (d > 1) out.torsion.push_back(d.convert_to<long long>());
  return out;
}

std::string AbelianInvariants::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(torsion[i]);
  }
  for (int i = 0; i < free_rank; ++i) {
    if (!s.empty() && s.back() != '[') s += ",";
    s += "0";
  }
  return s + "]";
}

std::vector<long long> merge_invariant_factors(const std::vector<std::vector<long long>>& summands) {
  // Split into prime powers, then rebuild the divisibility chain by taking
  // the largest power of each prime into the last factor, and so on.
  std::map<long long, std::vector<int>> powers;  // prime -> exponents
  for (const auto& list : summands)
    for (long long d : list) {
      long long x = d;
      for (long long p = 2; p * p <= x; ++p) {
        int e = 0;
        while (x % p == 0) {
          x /= p;
          ++e;
        }
        if (e) powers[p].push_back(e);
      }
      if (x > 1) powers[x].push_back(1);
    }
  std::size_t k = 0;
  for (auto& [p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<>());
    k = std::max(k, es.size());
  }
  std::vector<long long> factors(k, 1);  // factors[0] = largest
  for (auto& [p, es] : powers)
    for (std::size_t i = 0; i < es.size(); ++i) {
      long long pw = 1;
      for (int e = 0; e < es[i]; ++e) pw *= p;
      factors[i] *= pw;
    }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

}  // namespace gpp
