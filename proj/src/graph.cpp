#include "gpp/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gpp/error.hpp"

namespace gpp {

SimpleGraph::SimpleGraph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  if (labels_.size() > 31) throw InvalidInput("graph too large (at most 31 vertices)");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j]) throw InvalidInput("duplicate vertex label " + labels_[i]);
  for (auto [v, w] : edges) {
    if (v < 0 || w < 0 || v >= n() || w >= n()) throw InvalidInput("edge endpoint out of range");
    if (v == w) throw InvalidInput("loop edge at vertex " + labels_[static_cast<std::size_t>(v)]);
    adj_[static_cast<std::size_t>(v)] |= 1u << w;
    adj_[static_cast<std::size_t>(w)] |= 1u << v;
  }
}

SimpleGraph SimpleGraph::complete(std::vector<std::string> labels) {
  std::vector<std::pair<int, int>> edges;
  int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return SimpleGraph(std::move(labels), std::move(edges));
}

SimpleGraph SimpleGraph::empty_graph(std::vector<std::string> labels) {
  return SimpleGraph(std::move(labels), {});
}

SimpleGraph SimpleGraph::cycle(std::vector<std::string> labels) {
  std::vector<std::pair<int, int>> edges;
  int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph(std::move(labels), std::move(edges));
}

SimpleGraph SimpleGraph::path(std::vector<std::string> labels) {
  std::vector<std::pair<int, int>> edges;
  int n = static_cast<int>(labels.size());
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SimpleGraph(std::move(labels), std::move(edges));
}

int SimpleGraph::vertex(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw InvalidInput("unknown vertex label " + label);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n(); ++v)
    for (int w = v + 1; w < n(); ++w)
      if (adjacent(v, w)) out.emplace_back(v, w);
  return out;
}

int SimpleGraph::edge_count() const { return static_cast<int>(edges().size()); }

SimpleGraph SimpleGraph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n(); ++v)
    for (int w = v + 1; w < n(); ++w)
      if (!adjacent(v, w)) edges.emplace_back(v, w);
  return SimpleGraph(labels_, std::move(edges));
}

SimpleGraph SimpleGraph::full_subgraph(const std::vector<int>& verts) const {
  std::vector<std::string> labels;
  for (int v : verts) labels.push_back(labels_.at(static_cast<std::size_t>(v)));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return SimpleGraph(std::move(labels), std::move(edges));
}

bool SimpleGraph::is_clique(std::uint32_t mask) const {
  for (int v = 0; v < n(); ++v) {
    if (!((mask >> v) & 1u)) continue;
    std::uint32_t rest = mask & ~(1u << v) & ~adj_[static_cast<std::size_t>(v)];
    if (rest) return false;
  }
  return true;
}

bool SimpleGraph::is_complete() const {
  return edge_count() == n() * (n() - 1) / 2;
}

std::string SimpleGraph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const std::string& l : labels_) out << "  \"" << l << "\";\n";
  for (auto [v, w] : edges())
    out << "  \"" << labels_[static_cast<std::size_t>(v)] << "\" -- \""
        << labels_[static_cast<std::size_t>(w)] << "\";\n";
  out << "}\n";
  return out.str();
}

CliquePoset::CliquePoset(const SimpleGraph& graph, const Limits& lim) {
  if (graph.n() > lim.clique_vertex_cap)
    throw CapExceeded("clique enumeration capped at " + std::to_string(lim.clique_vertex_cap) +
                      " vertices");
  // Expand cliques by adding larger-indexed vertices adjacent to all members.
  std::vector<std::uint32_t> found{0u};
  auto expand = [&](auto&& self, std::uint32_t clique, int last) -> void {
    for (int v = last + 1; v < graph.n(); ++v) {
      if ((clique & ~graph.neighbors_mask(v)) != 0) continue;
      std::uint32_t next = clique | (1u << v);
      found.push_back(next);
      self(self, next, v);
    }
  };
  expand(expand, 0u, -1);
  std::sort(found.begin(), found.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  cliques_ = std::move(found);
}

int CliquePoset::index_of(std::uint32_t mask) const {
  for (std::size_t i = 0; i < cliques_.size(); ++i)
    if (cliques_[i] == mask) return static_cast<int>(i);
  throw InvalidInput("vertex set is not a clique of the graph");
}

std::string CliquePoset::label(int i, const SimpleGraph& graph) const {
  std::uint32_t m = mask(i);
  if (!m) return "{}";
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < graph.n(); ++v)
    if ((m >> v) & 1u) {
      if (!first) out += ",";
      out += graph.labels()[static_cast<std::size_t>(v)];
      first = false;
    }
  return out + "}";
}

}  // namespace gpp
