#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Sparse frequency vector: value -> number of vertices (only nonzero counts).
using Frequencies = std::map<std::int64_t, std::int64_t>;

/// (n, m, min degree, max degree, n_i). Sufficient statistic for every
/// degree-based closed form.
struct DegreeProfile {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  Frequencies freq;

  /// Builds a profile from counts and checks sum n_i = n, sum i*n_i = 2m.
  static DegreeProfile from_counts(std::int64_t edges, Frequencies freq);

  std::int64_t count(std::int64_t degree) const;
  bool regular() const noexcept { return min_degree == max_degree; }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Profile of 2-distance degrees d2(u) = |{w : dist(u, w) = 2}| together
/// with the graph's first Zagreb index. `min_degree`/`max_degree` refer to
/// 2-distance degrees.
struct TwoDistProfile {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t first_zagreb = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  Frequencies freq;
  /// Source graph has no 3-cycle and no 4-cycle; then sum i*n_i = M1 - 2m.
  bool c3c4_free = false;

  static TwoDistProfile from_counts(std::int64_t edges, std::int64_t first_zagreb,
                                    Frequencies freq, bool c3c4_free);

  std::int64_t count(std::int64_t value) const;
  /// M1 - 2m.
  std::int64_t leap_total() const noexcept { return first_zagreb - 2 * edges; }

  friend bool operator==(const TwoDistProfile&, const TwoDistProfile&) = default;
};

DegreeProfile degree_profile(const Graph& g);

/// d2(u) for every vertex, by breadth-first search truncated at depth 2.
std::vector<std::int64_t> two_distance_degrees(const Graph& g);

TwoDistProfile two_dist_profile(const Graph& g);

/// No triangle, and no two distinct vertices with two common neighbours.
bool is_c3c4_free(const Graph& g);

/// Sum of squared degrees, exact in 64 bits for any graph that fits in memory.
std::int64_t first_zagreb(const Graph& g);

}  // namespace zagreb
