#pragma once

// Profile-level closed forms for the general first Zagreb index and coindex
// (degree profiles) and for the general first leap Zagreb index and leap
// coindex (2-distance profiles of triangle- and quadrangle-free graphs).
//
// Every formula eliminates the frequencies of the extreme values from
//
//   sum_i n_i = n,   sum_i i * n_i = W,
//
// with W = 2m for degrees and W = M1 - 2m for 2-distance degrees. Two
// eliminations are provided:
//
//   secant:    n lo^a + (W - n lo) s_a
//              + sum_{i=1}^{hi-lo-1} n_{lo+i} [(lo+i)^a - lo^a - i s_a],
//              s_a = (hi^a - lo^a) / (hi - lo)
//   unit step: n lo^a + (W - n lo) t_a
//              + sum_{i=2}^{hi-lo} n_{lo+i} [(lo+i)^a - lo^a - i t_a],
//              t_a = (lo+1)^a - lo^a
//
// Hypotheses that the formulas require are reported as typed
// Inapplicability outcomes rather than exceptions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "zagreb/indices.hpp"
#include "zagreb/number.hpp"
#include "zagreb/profile.hpp"

namespace zagreb {

enum class Reason {
  regular_profile,          // min == max, the secant slope is undefined
  alpha_out_of_range,       // exponent outside the statement's range
  not_c3c4_free,            // 2-distance identity sum i*n_i = M1 - 2m unavailable
  zero_min_two_degree,      // d = 0: use leap_formula_d_zero
  nonzero_min_two_degree,   // d != 0 where d = 0 is required
  max_two_degree_below_two, // D < 2
  max_degree_below_three,   // Delta < 3
  span_below_two,           // max - min < 2
  zero_quotient,            // total < span, so q = 0
  zero_remainder,           // r = 0
  missing_remainder_vertex, // n_{min + r} = 0
};

std::string_view to_string(Reason reason);

struct Inapplicability {
  Reason reason;
  std::string detail;
};

class InapplicableError : public std::logic_error {
 public:
  explicit InapplicableError(Inapplicability why)
      : std::logic_error(std::string(to_string(why.reason)) + ": " + why.detail),
        why_(std::move(why)) {}
  const Inapplicability& why() const noexcept { return why_; }

 private:
  Inapplicability why_;
};

/// Either a value or the reason the hypotheses failed.
template <class T>
class Checked {
 public:
  Checked(T value) : v_(std::move(value)) {}
  Checked(Inapplicability why) : v_(std::move(why)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(v_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const {
    if (!ok()) {
      throw InapplicableError(std::get<Inapplicability>(v_));
    }
    return std::get<T>(v_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const Inapplicability& why() const { return std::get<Inapplicability>(v_); }

 private:
  std::variant<T, Inapplicability> v_;
};

enum class GapVariant {
  secant,     // (p+i)^a - p^a - i (q^a - p^a)/(q - p),  1 <= i <= q-p-1
  unit_step,  // (p+i)^a - p^a - i ((p+1)^a - p^a),      2 <= i <= q-p
};

/// Coefficient of n_{p+i} in the secant / unit-step eliminations.
///
/// For alpha < 0 or alpha > 1 the secant gap is <= 0 and the unit-step gap
/// is >= 0; for 0 < alpha < 1 both signs flip. Throws std::out_of_range if
/// i is outside the variant's range or p, q are not 0 < p < q.
Value lemma_gap_term(std::int64_t p, std::int64_t q, std::int64_t i, const ExponentParam& alpha,
                     GapVariant variant);

enum class Anchor { min, min_plus_one };

// Degree profiles. Require min_degree != max_degree.
Checked<IndexValue> zagreb_formula_min_anchored(const DegreeProfile& prof, const ExponentParam& alpha);
Checked<IndexValue> zagreb_formula_minplus_anchored(const DegreeProfile& prof,
                                                    const ExponentParam& alpha);

/// (n-1) F(alpha) - F(alpha+1) with F the chosen elimination; this is the
/// general first Zagreb coindex of order alpha. Requires alpha > 1.
Checked<IndexValue> zagreb_coindex_formula(const DegreeProfile& prof, const ExponentParam& alpha,
                                           Anchor anchor);

// 2-distance profiles. Require c3c4_free, d != 0, D != d, D >= 2.
Checked<IndexValue> leap_formula(const TwoDistProfile& prof, const ExponentParam& alpha,
                                 Anchor anchor);

enum class LeapCoindexVariant {
  secant,     // (M1-2m)(n-1-D-d) + ndD - sum_{i=1}^{D-d-1} n_{d+i} i (d+i-D)
  unit_step,  // (M1-2m)(n-2d-2) + nd(d+1) - sum_{i=2}^{D-d} n_{d+i} i (i-1)
};

/// First leap Zagreb coindex from the profile; exact.
Checked<IndexValue> leap_coindex_formula(const TwoDistProfile& prof, LeapCoindexVariant variant);

enum class DZeroVariant {
  anchored,    // secant elimination over the vertices with d2 >= 1; needs D >= 2
  simplified,  // M1 - 2m + sum_{i=2}^{D} n_i (i^a - i)
};

/// Leap index when some vertex has 2-distance degree 0. Requires d = 0 and a
/// C3,C4-free source; throws std::domain_error for alpha < 0.
Checked<IndexValue> leap_formula_d_zero(const TwoDistProfile& prof, const ExponentParam& alpha,
                                        DZeroVariant variant);

}  // namespace zagreb
