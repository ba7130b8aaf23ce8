#include "zagreb/graph.hpp"

#include <algorithm>

namespace zagreb {

namespace {

std::string pair_text(std::int64_t u, std::int64_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(std::size_t vertex_count,
                            std::span<const std::pair<std::int64_t, std::int64_t>> pairs) {
  if (vertex_count > std::size_t{1} << 31) {
    throw GraphError("vertex count " + std::to_string(vertex_count) + " is too large");
  }
  const auto n = static_cast<std::int64_t>(vertex_count);

  Graph g;
  g.edges_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (u == v) {
      throw GraphError("self-loop " + pair_text(u, v));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("vertex index out of range in pair " + pair_text(u, v) +
                       " for n=" + std::to_string(n));
    }
    const auto a = static_cast<Vertex>(std::min(u, v));
    const auto b = static_cast<Vertex>(std::max(u, v));
    g.edges_.push_back(Edge{a, b});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(vertex_count, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
  }

  if (vertex_count <= kBitsetLimit) {
    g.rows_.assign(vertex_count, 0);
    for (const Edge& e : g.edges_) {
      g.rows_[e.u] |= std::uint64_t{1} << e.v;
      g.rows_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  return g;
}

Graph Graph::from_edge_list(std::size_t vertex_count,
                            std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs) {
  return from_edge_list(vertex_count, std::span(pairs.begin(), pairs.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) {
    return false;
  }
  if (!rows_.empty()) {
    return (rows_[u] >> v) & 1U;
  }
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n <= 1) {
    return true;
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace zagreb
