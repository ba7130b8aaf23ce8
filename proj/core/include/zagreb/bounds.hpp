#pragma once

// Upper and lower bounds obtained by dropping the correction sums of the
// secant and unit-step eliminations, and the sharper remainder bounds that
// keep one correction term.

#include <cstdint>
#include <optional>
#include <string_view>

#include "zagreb/closed_forms.hpp"

namespace zagreb {

enum class Domain { degree, leap };
enum class Direction { upper, lower };

enum class BoundKind {
  secant_convex,       // alpha < 0 or alpha > 1: index <= secant base
  secant_concave,      // 0 < alpha < 1: index >= secant base
  unit_step_convex,    // alpha < 0 or alpha > 1: index >= unit-step base (+ top gap)
  unit_step_concave,   // 0 < alpha < 1: index <= unit-step base (+ top gap)
  remainder,           // secant base + one remainder gap; direction from alpha
};

std::string_view to_string(Domain domain);
std::string_view to_string(Direction direction);
std::string_view to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

struct BoundReport {
  Domain domain;
  BoundKind kind;
  std::optional<ExponentParam> alpha;
  Direction direction = Direction::upper;
  bool applicable = false;
  std::optional<Inapplicability> reason;  // set when !applicable
  std::optional<IndexValue> bound;        // set when applicable
  bool attained = false;                  // set by check_attainment
};

/// total = quotient * span + remainder with 0 <= remainder < span.
struct RemainderDecomposition {
  std::int64_t quotient;
  std::int64_t remainder;
  std::int64_t span;
  std::int64_t total;
};

/// Throws std::invalid_argument for span < 1 or total < 0.
RemainderDecomposition decompose(std::int64_t total, std::int64_t span);

/// A structural implication premise => conclusion evaluated on one profile.
struct StructureCheck {
  bool premise = false;
  bool conclusion = false;
  bool holds() const noexcept { return !premise || conclusion; }
};

struct RemainderReport {
  std::optional<RemainderDecomposition> decomposition;  // absent if max == min
  BoundReport bound;
  /// r = 0 and n_max = q  =>  only min and max occur.
  StructureCheck bi_valued;
  /// r >= 1 and n_max = q  =>  n_i = 0 for min+r+1 <= i <= max-1, n_{min+r} <= 1.
  StructureCheck truncated;
};

/// Secant and unit-step bounds on the general first Zagreb index.
/// Passing BoundKind::remainder forwards to zagreb_remainder_bound.
BoundReport zagreb_bound(const DegreeProfile& prof, const ExponentParam& alpha, BoundKind kind);

/// Remainder bound with 2m - n delta = q (Delta - delta) + r. Needs
/// Delta >= 3, Delta - delta >= 2, q >= 1, r >= 1 and n_{delta + r} >= 1.
RemainderReport zagreb_remainder_bound(const DegreeProfile& prof, const ExponentParam& alpha);

/// Leap analogues over 2-distance profiles of C3,C4-free graphs with d >= 1.
BoundReport leap_bound(const TwoDistProfile& prof, const ExponentParam& alpha, BoundKind kind);
RemainderReport leap_remainder_bound(const TwoDistProfile& prof, const ExponentParam& alpha);

/// The secant / unit-step kind whose exponent range contains alpha.
BoundKind secant_kind_for(const ExponentParam& alpha);
BoundKind unit_step_kind_for(const ExponentParam& alpha);

/// direct <= bound (upper) or direct >= bound (lower), within tolerance.
/// Inapplicable reports are vacuously respected.
bool respects(const BoundReport& report, const Value& direct);

/// Sets report.attained from |direct - bound|; returns the gap (nullopt when
/// the report is inapplicable).
std::optional<Value> check_attainment(BoundReport& report, const Value& direct);

}  // namespace zagreb
