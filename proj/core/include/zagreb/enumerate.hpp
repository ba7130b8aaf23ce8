#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr int kMaxEnumerationOrder = 7;

/// Half-open range [begin, end) of edge-subset masks.
///
/// Bit k of a mask selects the k-th vertex pair in lexicographic order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct MaskRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Number of edge subsets on n labelled vertices, 2^(n(n-1)/2).
std::uint64_t mask_count(int n);

/// The `shard`-th of `shards` contiguous, disjoint ranges covering all masks.
MaskRange partition(int n, std::uint64_t shard, std::uint64_t shards);

Graph graph_from_mask(int n, std::uint64_t mask);

/// Streams every connected labelled graph on n vertices (1 <= n <= 7) whose
/// mask lies in the given range, in increasing mask order, without
/// isomorphism reduction.
class ConnectedGraphEnumerator {
 public:
  explicit ConnectedGraphEnumerator(int n);
  ConnectedGraphEnumerator(int n, MaskRange range);

  /// Next connected graph, or nullopt when the range is exhausted.
  std::optional<Graph> next();
  /// Mask of the graph most recently returned by next().
  std::uint64_t mask() const noexcept { return last_; }

 private:
  bool connected(std::uint64_t mask) const;

  int n_;
  MaskRange range_;
  std::uint64_t cursor_;
  std::uint64_t last_ = 0;
};

/// Calls fn(graph, mask) for every connected graph in range; returns the count.
std::uint64_t for_each_connected_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& fn);
std::uint64_t for_each_connected_graph(int n, MaskRange range,
                                       const std::function<void(const Graph&, std::uint64_t)>& fn);

/// Connected graphs on n vertices with no 3-cycle and no 4-cycle, filtered
/// on adjacency bitsets before any Graph is built; mask order.
std::uint64_t for_each_c3c4_free_connected_graph(
    int n, const std::function<void(const Graph&, std::uint64_t)>& fn);

}  // namespace zagreb
