#include "zagreb/indices.hpp"

#include <stdexcept>
#include <vector>

#include "zagreb/profile.hpp"

namespace zagreb {

namespace {

std::vector<std::int64_t> degrees(const Graph& g) {
  std::vector<std::int64_t> d(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    d[u] = static_cast<std::int64_t>(g.degree(u));
  }
  return d;
}

// Row-major n x n flags: at_two[u * n + w] iff dist(u, w) == 2.
std::vector<char> distance_two_relation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> at_two(n * n, 0);
  std::vector<std::size_t> stamp(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t mark = u + 1;
    stamp[u] = mark;
    for (Vertex w : g.neighbors(u)) {
      stamp[w] = mark;
    }
    for (Vertex w : g.neighbors(u)) {
      for (Vertex x : g.neighbors(w)) {
        if (stamp[x] != mark) {
          stamp[x] = mark;
          at_two[u * n + x] = 1;
        }
      }
    }
  }
  return at_two;
}

}  // namespace

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::general_zagreb:
      return "general_zagreb";
    case IndexKind::general_zagreb_coindex:
      return "general_zagreb_coindex";
    case IndexKind::general_leap_zagreb:
      return "general_leap_zagreb";
    case IndexKind::leap_zagreb_coindex:
      return "leap_zagreb_coindex";
  }
  return "unknown";
}

IndexValue general_first_zagreb(const Graph& g, const ExponentParam& alpha) {
  const auto d = degrees(g);
  Value v = evaluate_in_mode(alpha, [&](auto tag) {
    using T = decltype(tag);
    T sum = from_int<T>(0);
    for (std::int64_t x : d) {
      if (x == 0 && alpha.alpha() < 0.0) {
        throw std::domain_error("isolated vertex with negative exponent");
      }
      sum += power<T>(x, alpha);
    }
    return sum;
  });
  return {IndexKind::general_zagreb, std::move(v)};
}

IndexValue general_first_zagreb_coindex(const Graph& g, const ExponentParam& alpha) {
  if (alpha.alpha() <= 0.0) {
    throw std::domain_error("coindex exponent must be positive");
  }
  const auto d = degrees(g);
  const auto n = static_cast<Vertex>(g.vertex_count());
  // Walk the non-adjacent pairs, counting how often each vertex occurs, then
  // weight each vertex once.
  std::vector<std::int64_t> occurs(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (!g.adjacent(u, w)) {
        ++occurs[u];
        ++occurs[w];
      }
    }
  }
  Value v = evaluate_in_mode(alpha, [&](auto tag) {
    using T = decltype(tag);
    T sum = from_int<T>(0);
    for (Vertex u = 0; u < n; ++u) {
      if (occurs[u] != 0) {
        sum += from_int<T>(occurs[u]) * power<T>(d[u], alpha);
      }
    }
    return sum;
  });
  return {IndexKind::general_zagreb_coindex, std::move(v)};
}

IndexValue general_first_leap_zagreb(const Graph& g, const ExponentParam& alpha) {
  const auto d2 = two_distance_degrees(g);
  Value v = evaluate_in_mode(alpha, [&](auto tag) {
    using T = decltype(tag);
    T sum = from_int<T>(0);
    for (std::int64_t x : d2) {
      if (x == 0 && alpha.alpha() < 0.0) {
        throw std::domain_error("zero 2-distance degree with negative exponent");
      }
      sum += power<T>(x, alpha);
    }
    return sum;
  });
  return {IndexKind::general_leap_zagreb, std::move(v)};
}

IndexValue first_leap_zagreb_coindex(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto at_two = distance_two_relation(g);
  const auto d2 = two_distance_degrees(g);
  std::vector<std::int64_t> occurs(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (!at_two[u * n + w]) {
        ++occurs[u];
        ++occurs[w];
      }
    }
  }
  Integer sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    sum += Integer(occurs[u]) * d2[u];
  }
  return {IndexKind::leap_zagreb_coindex, Value(Rational(sum))};
}

}  // namespace zagreb
