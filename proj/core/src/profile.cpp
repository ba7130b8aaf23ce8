#include "zagreb/profile.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace zagreb {

namespace {

struct Summary {
  std::int64_t vertices = 0;
  std::int64_t weighted = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

Summary summarize(const Frequencies& freq) {
  if (freq.empty()) {
    throw std::invalid_argument("profile needs at least one vertex");
  }
  Summary s;
  for (const auto& [value, count] : freq) {
    if (value < 0 || count <= 0) {
      throw std::invalid_argument("profile entries need value >= 0 and count >= 1 (got " +
                                  std::to_string(value) + ":" + std::to_string(count) + ")");
    }
    s.vertices += count;
    s.weighted += value * count;
  }
  s.lo = freq.begin()->first;
  s.hi = freq.rbegin()->first;
  return s;
}

std::int64_t lookup(const Frequencies& freq, std::int64_t key) {
  const auto it = freq.find(key);
  return it == freq.end() ? 0 : it->second;
}

std::size_t common_neighbours(const Graph& g, Vertex u, Vertex v) {
  if (g.has_bitsets()) {
    return static_cast<std::size_t>(std::popcount(g.row(u) & g.row(v)));
  }
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

}  // namespace

DegreeProfile DegreeProfile::from_counts(std::int64_t edges, Frequencies freq) {
  const Summary s = summarize(freq);
  if (s.weighted != 2 * edges) {
    throw std::invalid_argument("degree profile violates the handshake lemma: sum i*n_i = " +
                                std::to_string(s.weighted) + " but 2m = " +
                                std::to_string(2 * edges));
  }
  DegreeProfile p;
  p.vertices = s.vertices;
  p.edges = edges;
  p.min_degree = s.lo;
  p.max_degree = s.hi;
  p.freq = std::move(freq);
  return p;
}

std::int64_t DegreeProfile::count(std::int64_t degree) const { return lookup(freq, degree); }

TwoDistProfile TwoDistProfile::from_counts(std::int64_t edges, std::int64_t first_zagreb,
                                           Frequencies freq, bool c3c4_free) {
  const Summary s = summarize(freq);
  if (c3c4_free && s.weighted != first_zagreb - 2 * edges) {
    throw std::invalid_argument("C3,C4-free 2-distance profile needs sum i*n_i = M1 - 2m (" +
                                std::to_string(s.weighted) + " vs " +
                                std::to_string(first_zagreb - 2 * edges) + ")");
  }
  TwoDistProfile p;
  p.vertices = s.vertices;
  p.edges = edges;
  p.first_zagreb = first_zagreb;
  p.min_degree = s.lo;
  p.max_degree = s.hi;
  p.freq = std::move(freq);
  p.c3c4_free = c3c4_free;
  return p;
}

std::int64_t TwoDistProfile::count(std::int64_t value) const { return lookup(freq, value); }

DegreeProfile degree_profile(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("degree profile of the empty graph");
  }
  Frequencies freq;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    ++freq[static_cast<std::int64_t>(g.degree(u))];
  }
  return DegreeProfile::from_counts(static_cast<std::int64_t>(g.edge_count()), std::move(freq));
}

std::vector<std::int64_t> two_distance_degrees(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> result(n, 0);
  // stamp[w] == u + 1 marks w as reached (depth <= 2) from source u.
  std::vector<std::size_t> stamp(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t mark = u + 1;
    stamp[u] = mark;
    for (Vertex w : g.neighbors(u)) {
      stamp[w] = mark;
    }
    std::int64_t at_two = 0;
    for (Vertex w : g.neighbors(u)) {
      for (Vertex x : g.neighbors(w)) {
        if (stamp[x] != mark) {
          stamp[x] = mark;
          ++at_two;
        }
      }
    }
    result[u] = at_two;
  }
  return result;
}

TwoDistProfile two_dist_profile(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("2-distance profile of the empty graph");
  }
  Frequencies freq;
  for (std::int64_t d2 : two_distance_degrees(g)) {
    ++freq[d2];
  }
  return TwoDistProfile::from_counts(static_cast<std::int64_t>(g.edge_count()), first_zagreb(g),
                                     std::move(freq), is_c3c4_free(g));
}

bool is_c3c4_free(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t common = common_neighbours(g, u, v);
      if (common >= 2) {
        return false;  // u-a-v-b-u
      }
      if (common == 1 && g.adjacent(u, v)) {
        return false;  // triangle
      }
    }
  }
  return true;
}

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto d = static_cast<std::int64_t>(g.degree(u));
    total += d * d;
  }
  return total;
}

}  // namespace zagreb
