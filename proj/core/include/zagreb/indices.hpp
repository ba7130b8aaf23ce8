#pragma once

// Direct evaluation of the Zagreb-family indices from their definitions.
// These are the oracles every closed form and bound is checked against.

#include <string_view>

#include "zagreb/graph.hpp"
#include "zagreb/number.hpp"

namespace zagreb {

enum class IndexKind {
  general_zagreb,          // sum_u d(u)^alpha
  general_zagreb_coindex,  // sum_{uv not in E, u != v} d(u)^alpha + d(v)^alpha
  general_leap_zagreb,     // sum_u d2(u)^alpha
  leap_zagreb_coindex,     // sum_{uv not in E2, u != v} d2(u) + d2(v)
};

std::string_view to_string(IndexKind kind);

struct IndexValue {
  IndexKind kind;
  Value value;
};

/// sum_u d(u)^alpha. Throws std::domain_error for an isolated vertex when
/// alpha < 0.
IndexValue general_first_zagreb(const Graph& g, const ExponentParam& alpha);

/// Sum over unordered non-adjacent distinct pairs of d(u)^alpha + d(v)^alpha.
/// Integer orders >= 1 are exact; real alpha > 0 is accepted in real mode.
/// Throws std::domain_error for alpha <= 0.
IndexValue general_first_zagreb_coindex(const Graph& g, const ExponentParam& alpha);

/// sum_u d2(u)^alpha with 0^alpha = 0 for alpha > 0. Throws
/// std::domain_error for a zero 2-distance degree when alpha < 0.
IndexValue general_first_leap_zagreb(const Graph& g, const ExponentParam& alpha);

/// Sum over unordered distinct pairs at distance other than 2 (adjacent,
/// 3 or more apart, or disconnected) of d2(u) + d2(v). Always exact.
IndexValue first_leap_zagreb_coindex(const Graph& g);

}  // namespace zagreb
