#pragma once

#include <cstddef>

namespace gpp {

/// Enumeration caps. Every construction here is exponential in the input,
/// so desk scale is enforced explicitly rather than discovered by timeout.
struct Limits {
  std::size_t element_cap = 1'000'000;  // max enumerated group order
  int iso_point_cap = 12;               // max point-set size for action-iso search
  int clique_vertex_cap = 10;           // max graph vertices for clique enumeration
  int radius_cap = 6;                   // max requested building radius
  std::size_t complex_vertex_cap = 100'000;  // max vertices of any built complex

  static const Limits& defaults() {
    static const Limits lim{};
    return lim;
  }
};

}  // namespace gpp
