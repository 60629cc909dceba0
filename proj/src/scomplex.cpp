#include "gpp/scomplex.hpp"

#include <algorithm>
#include <sstream>

#include "gpp/error.hpp"

namespace gpp {

SimComplex SimComplex::from_maximal(std::vector<std::string> labels,
                                    const std::vector<std::vector<int>>& maximal) {
  SimComplex k;
  k.labels_ = std::move(labels);
  for (int v = 0; v < k.n_vertices(); ++v) k.simplices_.insert({v});
  for (const auto& simplex : maximal) {
    std::vector<int> s = simplex;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
      if (v < 0 || v >= k.n_vertices()) throw InvalidInput("simplex vertex out of range");
    // all nonempty subsets
    std::size_t m = s.size();
    for (std::size_t bits = 1; bits < (1u << m); ++bits) {
      std::vector<int> face;
      for (std::size_t i = 0; i < m; ++i)
        if ((bits >> i) & 1u) face.push_back(s[i]);
      k.simplices_.insert(std::move(face));
    }
  }
  return k;
}

bool SimComplex::has_simplex(std::vector<int> verts) const {
  std::sort(verts.begin(), verts.end());
  return simplices_.count(verts) > 0;
}

std::vector<std::pair<int, int>> SimComplex::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : simplices_)
    if (s.size() == 2) out.emplace_back(s[0], s[1]);
  return out;
}

std::vector<std::array<int, 3>> SimComplex::triangles() const {
  std::vector<std::array<int, 3>> out;
  for (const auto& s : simplices_)
    if (s.size() == 3) out.push_back({s[0], s[1], s[2]});
  return out;
}

std::vector<std::vector<int>> SimComplex::maximal_simplices() const {
  std::vector<std::vector<int>> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    for (const auto& t : simplices_) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

int SimComplex::dimension() const {
  std::size_t d = 0;
  for (const auto& s : simplices_) d = std::max(d, s.size());
  return static_cast<int>(d) - 1;
}

long long SimComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool SimComplex::adjacent(int v, int w) const {
  if (v == w) return false;
  return simplices_.count({std::min(v, w), std::max(v, w)}) > 0;
}

std::size_t SimComplex::count_of_dim(int d) const {
  std::size_t n = 0;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == d + 1) ++n;
  return n;
}

std::string SimComplex::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < n_vertices(); ++v)
    out << "  n" << v << " [label=\"" << labels_[static_cast<std::size_t>(v)] << "\"];\n";
  for (auto [v, w] : edges()) out << "  n" << v << " -- n" << w << ";\n";
  out << "}\n";
  return out.str();
}

SimComplex order_complex(int n, const std::function<bool(int, int)>& less,
                         std::vector<std::string> labels) {
  // Enumerate maximal chains; each chain is listed in increasing poset order.
  std::vector<std::vector<int>> chains;
  auto extend = [&](auto&& self, std::vector<int>& chain) -> void {
    bool maximal = true;
    for (int y = 0; y < n; ++y) {
      if (chain.empty() || less(chain.back(), y)) {
        chain.push_back(y);
        maximal = false;
        self(self, chain);
        chain.pop_back();
      }
    }
    if (maximal && !chain.empty()) chains.push_back(chain);
  };
  std::vector<int> chain;
  extend(extend, chain);
  return SimComplex::from_maximal(std::move(labels), chains);
}

bool is_flag(const SimComplex& complex) {
  // Enough to check maximal cliques of the 1-skeleton.
  int n = complex.n_vertices();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [v, w] : complex.edges())
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
        adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] = 1;

  bool ok = true;
  // Expand cliques by larger-indexed vertices; prune non-maximal branches.
  auto expand = [&](auto&& self, std::vector<int>& clique, int last) -> void {
    if (!ok) return;
    bool extended = false;
    for (int v = last + 1; v < n; ++v) {
      bool compatible = true;
      for (int u : clique)
        if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      extended = true;
      clique.push_back(v);
      self(self, clique, v);
      clique.pop_back();
    }
    if (!extended && clique.size() >= 3) {
      if (!complex.has_simplex(clique)) ok = false;
    }
  };
  std::vector<int> clique;
  expand(expand, clique, -1);
  return ok;
}

}  // namespace gpp
