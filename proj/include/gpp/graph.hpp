#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpp/limits.hpp"

namespace gpp {

/// Finite simple graph: no loops, at most one undirected edge per pair.
/// Vertices are ordered by label; all canonical forms downstream use this
/// fixed order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges);

  static SimpleGraph complete(std::vector<std::string> labels);
  static SimpleGraph empty_graph(std::vector<std::string> labels);
  static SimpleGraph cycle(std::vector<std::string> labels);
  static SimpleGraph path(std::vector<std::string> labels);

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int vertex(const std::string& label) const;  // throws if absent
  bool adjacent(int v, int w) const { return v != w && (adj_[static_cast<std::size_t>(v)] >> w) & 1u; }
  std::uint32_t neighbors_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  /// Complement graph on the same vertex set.
  SimpleGraph complement() const;
  /// Full subgraph on the given vertices (indices into this graph).
  SimpleGraph full_subgraph(const std::vector<int>& verts) const;

  bool is_clique(std::uint32_t mask) const;
  bool is_complete() const;

  std::string to_dot(const std::string& name = "G") const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> adj_;  // bitmask rows
};

/// The poset of all cliques of a graph (empty set and singletons included),
/// ordered by inclusion. Elements are bitmasks sorted by (popcount, value),
/// so the empty clique is element 0.
class CliquePoset {
 public:
  CliquePoset() = default;
  CliquePoset(const SimpleGraph& graph, const Limits& lim = Limits::defaults());

  int size() const { return static_cast<int>(cliques_.size()); }
  std::uint32_t mask(int i) const { return cliques_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& masks() const { return cliques_; }
  int index_of(std::uint32_t mask) const;  // throws if not a clique
  bool leq(int i, int j) const {           // inclusion
    return (cliques_[static_cast<std::size_t>(i)] & ~cliques_[static_cast<std::size_t>(j)]) == 0;
  }
  std::string label(int i, const SimpleGraph& graph) const;

 private:
  std::vector<std::uint32_t> cliques_;
};

}  // namespace gpp
