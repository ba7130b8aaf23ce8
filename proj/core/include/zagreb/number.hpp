#pragma once

// Numeric regimes shared by every index, formula and bound.
//
// Integer exponents are evaluated exactly over arbitrary-precision rationals;
// any other exponent falls back to IEEE doubles. Comparisons between values
// are exact when both sides are exact and relative (1e-9) otherwise.

#include <cstdint>
#include <string>
#include <type_traits>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace zagreb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kRelativeTolerance = 1e-9;

enum class ExponentMode { exact, real };

/// Real exponent alpha used by the general (leap) Zagreb indices.
///
/// Construct with `of` for the index exponents (alpha outside {0, 1}) or with
/// `order` for integer coindex orders, which additionally admit alpha = 1.
class ExponentParam {
 public:
  static ExponentParam of(double alpha);
  static ExponentParam order(std::int64_t k);

  double alpha() const noexcept { return alpha_; }
  ExponentMode mode() const noexcept { return mode_; }
  bool exact() const noexcept { return mode_ == ExponentMode::exact; }

  // Only meaningful in exact mode.
  std::int64_t as_integer() const noexcept { return integer_; }

  /// alpha < 0 or alpha > 1: x^alpha is convex on the positive integers
  /// (for alpha < 0 the secant-slope ordering is the same as for alpha > 1).
  bool convex_regime() const noexcept { return alpha_ < 0.0 || alpha_ > 1.0; }
  /// 0 < alpha < 1.
  bool concave_regime() const noexcept { return alpha_ > 0.0 && alpha_ < 1.0; }

  ExponentParam plus_one() const;

  std::string str() const;

  friend bool operator==(const ExponentParam& a, const ExponentParam& b) noexcept {
    return a.alpha_ == b.alpha_;
  }

 private:
  ExponentParam(double alpha, ExponentMode mode, std::int64_t integer)
      : alpha_(alpha), mode_(mode), integer_(integer) {}

  double alpha_;
  ExponentMode mode_;
  std::int64_t integer_;
};

/// A computed quantity in one of the two numeric regimes.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational r) : v_(std::move(r)) {}
  Value(double d) : v_(d) {}

  bool exact() const noexcept { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  double to_double() const;

  /// Integers print as integers, other rationals as p/q, doubles with
  /// 15 significant digits.
  std::string str() const;

 private:
  std::variant<Rational, double> v_;
};

/// Exact equality when both are exact, otherwise |a-b| <= tol*max(1,|a|,|b|).
bool same_value(const Value& a, const Value& b, double rel_tol = kRelativeTolerance);

/// a <= b, with the same tolerance rule as same_value.
bool at_most(const Value& a, const Value& b, double rel_tol = kRelativeTolerance);

/// |a - b|; exact when both are exact.
Value abs_difference(const Value& a, const Value& b);

std::string to_string(const Rational& r);
std::string format_double(double d);

// Arithmetic helpers used by the templated evaluators. `T` is Rational in
// exact mode and double in real mode.

template <class T>
T from_int(std::int64_t x) {
  if constexpr (std::is_same_v<T, double>) {
    return static_cast<double>(x);
  } else {
    return T(x);
  }
}

/// base^alpha with the convention 0^alpha = 0 for alpha > 0.
/// Throws std::domain_error for base 0 with alpha < 0, or for a negative base.
template <class T>
T power(std::int64_t base, const ExponentParam& alpha);

template <>
Rational power<Rational>(std::int64_t base, const ExponentParam& alpha);
template <>
double power<double>(std::int64_t base, const ExponentParam& alpha);

/// Evaluates `fn` in the numeric regime selected by `alpha`. `fn` is a
/// generic callable taking a tag `T{}` (Rational or double).
template <class Fn>
Value evaluate_in_mode(const ExponentParam& alpha, Fn&& fn) {
  if (alpha.exact()) {
    return Value(fn(Rational{}));
  }
  return Value(fn(double{}));
}

}  // namespace zagreb
