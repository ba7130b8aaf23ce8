#pragma once

#include <cmath>
#include <string>

#include "zagreb/graph.hpp"
#include "zagreb/number.hpp"

namespace testing {

inline zagreb::Graph path(int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int i = 0; i + 1 < n; ++i) {
    e.emplace_back(i, i + 1);
  }
  return zagreb::Graph::from_edge_list(n, e);
}

inline zagreb::Graph cycle(int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
  }
  return zagreb::Graph::from_edge_list(n, e);
}

// K_{1,k}, centre 0.
inline zagreb::Graph star(int k) {
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int i = 1; i <= k; ++i) {
    e.emplace_back(0, i);
  }
  return zagreb::Graph::from_edge_list(k + 1, e);
}

inline zagreb::Graph complete(int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      e.emplace_back(i, j);
    }
  }
  return zagreb::Graph::from_edge_list(n, e);
}

inline bool is_integer(const zagreb::Value& v, std::int64_t want) {
  return v.exact() && v.rational() == zagreb::Rational(want);
}

inline bool near(const zagreb::Value& v, double want, double tol = 1e-9) {
  return std::abs(v.to_double() - want) <= tol * std::max(1.0, std::abs(want));
}

inline zagreb::ExponentParam A(double a) { return zagreb::ExponentParam::of(a); }

}  // namespace testing
