#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zagreb {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices {0, ..., n-1}.
///
/// Keeps a sorted edge list and sorted adjacency lists. Graphs with at most
/// 64 vertices also carry one adjacency bitset per vertex, which makes
/// `adjacent` and common-neighbour counting constant time.
class Graph {
 public:
  static constexpr std::size_t kBitsetLimit = 64;

  Graph() = default;

  /// Builds a graph from vertex pairs; duplicate pairs (in either
  /// orientation) collapse into one edge. Throws GraphError naming the first
  /// self-loop or out-of-range pair.
  static Graph from_edge_list(std::size_t vertex_count,
                              std::span<const std::pair<std::int64_t, std::int64_t>> pairs);
  static Graph from_edge_list(std::size_t vertex_count,
                              std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex u) const { return adjacency_.at(u); }
  std::size_t degree(Vertex u) const { return adjacency_.at(u).size(); }

  bool adjacent(Vertex u, Vertex v) const;

  bool has_bitsets() const noexcept { return !rows_.empty() || adjacency_.empty(); }
  /// Adjacency row of u as a bitset; requires has_bitsets().
  std::uint64_t row(Vertex u) const { return rows_.at(u); }

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace zagreb
