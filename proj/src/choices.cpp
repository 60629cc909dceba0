#include "gpp/choices.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "gpp/error.hpp"

namespace gpp {

ChoiceComplex ChoiceComplex::build(const PairFamily& fam, const Limits& lim) {
  for (int v = 0; v < fam.n(); ++v)
    if (!fam.pair(v).is_finite())
      throw HypothesisRefused("choice complex needs finite coset spaces; vertex " +
                              fam.graph().labels()[static_cast<std::size_t>(v)] +
                              " is an infinite preset");
  std::size_t total = 1;
  for (int v = 0; v < fam.n(); ++v) {
    total *= static_cast<std::size_t>(1 + fam.pair(v).coset_count());
    if (total > lim.complex_vertex_cap)
      throw CapExceeded("choice complex would exceed the vertex cap");
  }
  ChoiceComplex cx;
  std::vector<int> y(static_cast<std::size_t>(fam.n()), -1);
  // odometer over (-1, 0, ..., |X_v|-1) per vertex, lexicographic
  while (true) {
    cx.verts.push_back(y);
    int v = fam.n() - 1;
    while (v >= 0) {
      std::size_t vi = static_cast<std::size_t>(v);
      if (y[vi] + 1 < fam.pair(v).coset_count()) {
        ++y[vi];
        break;
      }
      y[vi] = -1;
      --v;
    }
    if (v < 0) break;
  }
  std::sort(cx.verts.begin(), cx.verts.end());
  for (std::size_t i = 0; i < cx.verts.size(); ++i)
    for (std::size_t j = i + 1; j < cx.verts.size(); ++j)
      if (contained(cx.verts[i], cx.verts[j]) || contained(cx.verts[j], cx.verts[i]))
        cx.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return cx;
}

int ChoiceComplex::index_of(const std::vector<int>& y) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), y);
  if (it == verts.end() || *it != y) return -1;
  return static_cast<int>(it - verts.begin());
}

bool ChoiceComplex::contained(const std::vector<int>& y, const std::vector<int>& z) {
  bool strict = false;
  for (std::size_t v = 0; v < y.size(); ++v) {
    if (y[v] == -1) {
      if (z[v] != -1) strict = true;
      continue;
    }
    if (y[v] != z[v]) return false;
  }
  return strict;
}

std::vector<int> ChoiceComplex::act(const PairFamily& fam, const std::vector<VElem>& tuple,
                                    const std::vector<int>& y) const {
  std::vector<int> out = y;
  for (int v = 0; v < fam.n(); ++v) {
    std::size_t vi = static_cast<std::size_t>(v);
    if (out[vi] >= 0)
      out[vi] = fam.pair(v).cosets.act(std::get<Perm>(tuple[vi]), out[vi]);
  }
  return out;
}

std::vector<int> ChoiceComplex::act_single(const PairFamily& fam, int v, const VElem& g,
                                           const std::vector<int>& y) const {
  std::vector<int> out = y;
  std::size_t vi = static_cast<std::size_t>(v);
  if (out[vi] >= 0) out[vi] = fam.pair(v).cosets.act(std::get<Perm>(g), out[vi]);
  return out;
}

std::string ChoiceComplex::vertex_str(const PairFamily& fam, const std::vector<int>& y) const {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < fam.n(); ++v) {
    int pt = y[static_cast<std::size_t>(v)];
    if (pt < 0) continue;
    if (!first) out += ", ";
    out += fam.graph().labels()[static_cast<std::size_t>(v)] + ":" + std::to_string(pt);
    first = false;
  }
  return out + "}";
}

SimComplex ChoiceComplex::to_complex(const PairFamily& fam) const {
  // chains of the containment order
  int n = static_cast<int>(verts.size());
  auto less = [&](int a, int b) {
    return contained(verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)]);
  };
  std::vector<std::string> labels;
  for (const auto& y : verts) labels.push_back(vertex_str(fam, y));
  return order_complex(n, less, std::move(labels));
}

DeltaComplex DeltaComplex::build(const PairFamily& fam, const Limits& lim) {
  DeltaComplex d;
  d.cx = ChoiceComplex::build(fam, lim);
  for (std::size_t i = 0; i < d.cx.verts.size(); ++i) {
    std::uint32_t unselected = 0;
    for (int v = 0; v < fam.n(); ++v)
      if (d.cx.verts[i][static_cast<std::size_t>(v)] < 0) unselected |= 1u << v;
    if (fam.graph().is_clique(unselected)) d.vert_ids.push_back(static_cast<int>(i));
  }
  for (auto [a, b] : d.cx.edges) {
    auto ia = std::lower_bound(d.vert_ids.begin(), d.vert_ids.end(), a);
    auto ib = std::lower_bound(d.vert_ids.begin(), d.vert_ids.end(), b);
    if (ia != d.vert_ids.end() && *ia == a && ib != d.vert_ids.end() && *ib == b)
      d.edges.emplace_back(static_cast<int>(ia - d.vert_ids.begin()),
                           static_cast<int>(ib - d.vert_ids.begin()));
  }
  return d;
}

SimComplex DeltaComplex::to_complex(const PairFamily& fam) const {
  int n = static_cast<int>(vert_ids.size());
  auto less = [&](int a, int b) {
    return ChoiceComplex::contained(cx.verts[static_cast<std::size_t>(vert_ids[static_cast<std::size_t>(a)])],
                                    cx.verts[static_cast<std::size_t>(vert_ids[static_cast<std::size_t>(b)])]);
  };
  std::vector<std::string> labels;
  for (int id : vert_ids) labels.push_back(cx.vertex_str(fam, cx.verts[static_cast<std::size_t>(id)]));
  return order_complex(n, less, std::move(labels));
}

bool DeltaComplex::verify_invariance(const PairFamily& fam) const {
  for (int v = 0; v < fam.n(); ++v) {
    for (const VElem& g : fam.pair(v).group_generators()) {
      for (int id : vert_ids) {
        std::vector<int> img = cx.act_single(fam, v, g, cx.verts[static_cast<std::size_t>(id)]);
        int img_id = cx.index_of(img);
        if (img_id < 0) return false;
        if (!std::binary_search(vert_ids.begin(), vert_ids.end(), img_id)) return false;
      }
    }
  }
  return true;
}

CoordinateIsoReport build_coordinate_iso(const PairFamily& complete_fam, const Building& dev,
                                         const ChoiceComplex& cx) {
  CoordinateIsoReport rep;
  const PairFamily& fam = complete_fam;
  if (!fam.graph().is_complete()) {
    rep.failure = "family graph is not complete";
    return rep;
  }
  const CliquePoset& cp = fam.cliques();

  auto coords_of = [&](const BVertex& vert) -> std::vector<int> {
    std::uint32_t s = cp.mask(vert.clique);
    std::vector<int> y(static_cast<std::size_t>(fam.n()), -1);
    for (int v = 0; v < fam.n(); ++v)
      if (!((s >> v) & 1u)) y[static_cast<std::size_t>(v)] = 0;  // identity coset unless a letter says otherwise
    for (const Letter& l : vert.word) {
      if ((s >> l.v) & 1u) {
        rep.failure = "coset word carries a letter inside its own type";
        return {};
      }
      y[static_cast<std::size_t>(l.v)] = static_cast<int>(l.a);
    }
    return y;
  };

  // vertex map + well-definedness + injectivity
  rep.building_to_choice.assign(dev.verts.size(), -1);
  std::vector<int> hit(cx.verts.size(), -1);
  for (std::size_t i = 0; i < dev.verts.size(); ++i) {
    std::vector<int> y = coords_of(dev.verts[i]);
    if (y.empty()) return rep;
    int id = cx.index_of(y);
    if (id < 0) {
      rep.failure = "image is not a vertex of the choice complex";
      return rep;
    }
    if (hit[static_cast<std::size_t>(id)] != -1) {
      rep.failure = "two building vertices map to the same selection";
      return rep;
    }
    hit[static_cast<std::size_t>(id)] = static_cast<int>(i);
    rep.building_to_choice[i] = id;
    ++rep.verts_matched;
  }
  if (rep.verts_matched != cx.verts.size()) {
    rep.failure = "vertex counts differ (" + std::to_string(rep.verts_matched) + " vs " +
                  std::to_string(cx.verts.size()) + ")";
    return rep;
  }

  // adjacency both ways: images of edges are edges, and counts agree
  std::set<std::pair<int, int>> cx_edges(cx.edges.begin(), cx.edges.end());
  for (auto [a, b] : dev.edges) {
    int x = rep.building_to_choice[static_cast<std::size_t>(a)];
    int y = rep.building_to_choice[static_cast<std::size_t>(b)];
    if (!cx_edges.count({std::min(x, y), std::max(x, y)})) {
      rep.failure = "edge image is not an edge";
      return rep;
    }
    ++rep.edges_matched;
  }
  if (rep.edges_matched != cx_edges.size()) {
    rep.failure = "edge counts differ (" + std::to_string(rep.edges_matched) + " vs " +
                  std::to_string(cx_edges.size()) + ")";
    return rep;
  }

  // equivariance under every vertex-group generator
  for (int v = 0; v < fam.n(); ++v) {
    for (const VElem& gv : fam.pair(v).group_generators()) {
      GPElement g = normalize(fam, {{v, gv}});
      for (std::size_t i = 0; i < dev.verts.size(); ++i) {
        const BVertex& vert = dev.verts[i];
        GPElement moved = multiply(fam, g, element_of_word(fam, vert.word));
        BVertex image{vert.clique, coset_word(fam, moved, cp.mask(vert.clique))};
        int img_idx = dev.index_of(image);
        if (img_idx < 0) {
          rep.failure = "building action left the full development";
          return rep;
        }
        std::vector<int> lhs = cx.verts[static_cast<std::size_t>(rep.building_to_choice[static_cast<std::size_t>(img_idx)])];
        std::vector<int> rhs = cx.act_single(fam, v, gv, cx.verts[static_cast<std::size_t>(rep.building_to_choice[i])]);
        if (lhs != rhs) {
          rep.failure = "equivariance fails at vertex " + bvertex_str(fam, vert);
          return rep;
        }
        ++rep.equivariance_checks;
      }
    }
  }

  // projection compatibility: the unselected set of the image is the type
  for (std::size_t i = 0; i < dev.verts.size(); ++i) {
    std::uint32_t s = cp.mask(dev.verts[i].clique);
    const std::vector<int>& y = cx.verts[static_cast<std::size_t>(rep.building_to_choice[i])];
    for (int v = 0; v < fam.n(); ++v) {
      bool unselected = y[static_cast<std::size_t>(v)] < 0;
      if (unselected != (((s >> v) & 1u) != 0)) {
        rep.failure = "type projection mismatch";
        return rep;
      }
    }
  }

  rep.ok = true;
  return rep;
}

}  // namespace gpp
