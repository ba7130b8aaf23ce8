#include "zagreb/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace zagreb {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::out_of_range("enumeration order must be in [1, " +
                            std::to_string(kMaxEnumerationOrder) + "] (got " +
                            std::to_string(n) + ")");
  }
}

using Rows = std::array<std::uint32_t, kMaxEnumerationOrder>;

Rows rows_of(int n, std::uint64_t mask) {
  Rows rows{};
  std::uint64_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[i] |= 1U << j;
        rows[j] |= 1U << i;
      }
    }
  }
  return rows;
}

bool rows_connected(int n, const Rows& rows) {
  const std::uint32_t all = (1U << n) - 1U;
  std::uint32_t reached = 1U;
  std::uint32_t frontier = 1U;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) {
        next |= rows[v];
      }
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

bool rows_c3c4_free(int n, const Rows& rows) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int common = std::popcount(rows[i] & rows[j]);
      if (common >= 2 || (common == 1 && ((rows[i] >> j) & 1U))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::uint64_t mask_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

MaskRange partition(int n, std::uint64_t shard, std::uint64_t shards) {
  if (shards == 0 || shard >= shards) {
    throw std::out_of_range("shard index out of range");
  }
  const std::uint64_t total = mask_count(n);
  const std::uint64_t base = total / shards;
  const std::uint64_t extra = total % shards;
  const std::uint64_t begin = shard * base + std::min(shard, extra);
  const std::uint64_t size = base + (shard < extra ? 1 : 0);
  return {begin, begin + size};
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  check_order(n);
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::uint64_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n)
    : ConnectedGraphEnumerator(n, MaskRange{0, mask_count(n)}) {}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, MaskRange range)
    : n_(n), range_(range), cursor_(range.begin) {
  if (range.end > mask_count(n) || range.begin > range.end) {
    throw std::out_of_range("mask range outside [0, 2^(n(n-1)/2))");
  }
}

bool ConnectedGraphEnumerator::connected(std::uint64_t mask) const {
  return rows_connected(n_, rows_of(n_, mask));
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  while (cursor_ < range_.end) {
    const std::uint64_t mask = cursor_++;
    if (connected(mask)) {
      last_ = mask;
      return graph_from_mask(n_, mask);
    }
  }
  return std::nullopt;
}

std::uint64_t for_each_connected_graph(int n,
                                       const std::function<void(const Graph&, std::uint64_t)>& fn) {
  return for_each_connected_graph(n, MaskRange{0, mask_count(n)}, fn);
}

std::uint64_t for_each_connected_graph(int n, MaskRange range,
                                       const std::function<void(const Graph&, std::uint64_t)>& fn) {
  ConnectedGraphEnumerator it(n, range);
  std::uint64_t count = 0;
  while (auto g = it.next()) {
    fn(*g, it.mask());
    ++count;
  }
  return count;
}

std::uint64_t for_each_c3c4_free_connected_graph(
    int n, const std::function<void(const Graph&, std::uint64_t)>& fn) {
  const std::uint64_t total = mask_count(n);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Rows rows = rows_of(n, mask);
    if (rows_c3c4_free(n, rows) && rows_connected(n, rows)) {
      fn(graph_from_mask(n, mask), mask);
      ++count;
    }
  }
  return count;
}

}  // namespace zagreb
