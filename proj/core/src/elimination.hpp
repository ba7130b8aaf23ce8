#pragma once

// Shared evaluators for the secant and unit-step eliminations. Internal to
// zagreb_core.

#include <cstdint>

#include "zagreb/number.hpp"
#include "zagreb/profile.hpp"

namespace zagreb::detail {

/// n vertices whose values lie in [lo, hi], with weighted total
/// W = sum_i i * n_i taken from the graph (2m, or M1 - 2m).
struct Spectrum {
  std::int64_t n;
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t total;
  const Frequencies* freq;

  /// W - n lo, the amount distributed above the minimum.
  std::int64_t excess() const noexcept { return total - n * lo; }
};

inline Spectrum degree_spectrum(const DegreeProfile& p) {
  return {p.vertices, p.min_degree, p.max_degree, 2 * p.edges, &p.freq};
}

inline Spectrum leap_spectrum(const TwoDistProfile& p) {
  return {p.vertices, p.min_degree, p.max_degree, p.leap_total(), &p.freq};
}

template <class T>
T secant_slope(std::int64_t lo, std::int64_t hi, const ExponentParam& a) {
  return (power<T>(hi, a) - power<T>(lo, a)) / from_int<T>(hi - lo);
}

template <class T>
T unit_step(std::int64_t lo, const ExponentParam& a) {
  return power<T>(lo + 1, a) - power<T>(lo, a);
}

template <class T>
T secant_gap(std::int64_t lo, std::int64_t hi, std::int64_t i, const ExponentParam& a) {
  return power<T>(lo + i, a) - power<T>(lo, a) - from_int<T>(i) * secant_slope<T>(lo, hi, a);
}

template <class T>
T unit_step_gap(std::int64_t lo, std::int64_t i, const ExponentParam& a) {
  return power<T>(lo + i, a) - power<T>(lo, a) - from_int<T>(i) * unit_step<T>(lo, a);
}

/// n lo^a + (W - n lo) s_a.
template <class T>
T secant_base(const Spectrum& s, const ExponentParam& a) {
  return from_int<T>(s.n) * power<T>(s.lo, a) + from_int<T>(s.excess()) * secant_slope<T>(s.lo, s.hi, a);
}

/// n lo^a + (W - n lo) t_a.
template <class T>
T unit_step_base(const Spectrum& s, const ExponentParam& a) {
  return from_int<T>(s.n) * power<T>(s.lo, a) + from_int<T>(s.excess()) * unit_step<T>(s.lo, a);
}

/// Secant elimination; the correction sum runs over lo < value < hi.
template <class T>
T secant_form(const Spectrum& s, const ExponentParam& a) {
  T total = secant_base<T>(s, a);
  const T slope = secant_slope<T>(s.lo, s.hi, a);
  const T lo_pow = power<T>(s.lo, a);
  for (const auto& [value, count] : *s.freq) {
    if (value > s.lo && value < s.hi) {
      const std::int64_t i = value - s.lo;
      total += from_int<T>(count) * (power<T>(value, a) - lo_pow - from_int<T>(i) * slope);
    }
  }
  return total;
}

/// Unit-step elimination; the correction sum runs over lo + 2 <= value <= hi.
template <class T>
T unit_step_form(const Spectrum& s, const ExponentParam& a) {
  T total = unit_step_base<T>(s, a);
  const T step = unit_step<T>(s.lo, a);
  const T lo_pow = power<T>(s.lo, a);
  for (const auto& [value, count] : *s.freq) {
    if (value >= s.lo + 2 && value <= s.hi) {
      const std::int64_t i = value - s.lo;
      total += from_int<T>(count) * (power<T>(value, a) - lo_pow - from_int<T>(i) * step);
    }
  }
  return total;
}

/// hi^a - lo^a - (hi - lo) t_a: the unit-step gap of the maximum, which is
/// the correction term of the unit-step bounds when hi >= 3.
template <class T>
T unit_step_top_gap(const Spectrum& s, const ExponentParam& a) {
  return unit_step_gap<T>(s.lo, s.hi - s.lo, a);
}

}  // namespace zagreb::detail
