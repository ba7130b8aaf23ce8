#include "zagreb/number.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zagreb {

namespace {

// Integer exponents above this magnitude are evaluated in real mode; exact
// powers of that size are never useful for desk-scale graphs.
constexpr double kMaxExactExponent = 4096.0;

}  // namespace

ExponentParam ExponentParam::of(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("exponent must be finite");
  }
  if (alpha == 0.0 || alpha == 1.0) {
    throw std::invalid_argument("exponent must not be 0 or 1 (got " + format_double(alpha) + ")");
  }
  if (std::trunc(alpha) == alpha && std::abs(alpha) <= kMaxExactExponent) {
    return ExponentParam(alpha, ExponentMode::exact, static_cast<std::int64_t>(alpha));
  }
  return ExponentParam(alpha, ExponentMode::real, 0);
}

ExponentParam ExponentParam::order(std::int64_t k) {
  if (k < 1 || k > static_cast<std::int64_t>(kMaxExactExponent)) {
    throw std::invalid_argument("coindex order must be an integer in [1, 4096] (got " +
                                std::to_string(k) + ")");
  }
  return ExponentParam(static_cast<double>(k), ExponentMode::exact, k);
}

ExponentParam ExponentParam::plus_one() const {
  if (exact() && integer_ >= 0) {
    return order(integer_ + 1);
  }
  return of(alpha_ + 1.0);
}

std::string ExponentParam::str() const {
  if (exact()) {
    return std::to_string(integer_);
  }
  return format_double(alpha_);
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string format_double(double d) {
  if (d == 0.0) {
    return "0";  // avoids "-0"
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", d);
  return buf;
}

double Value::to_double() const {
  if (exact()) {
    return std::get<Rational>(v_).convert_to<double>();
  }
  return std::get<double>(v_);
}

std::string Value::str() const {
  if (exact()) {
    return to_string(std::get<Rational>(v_));
  }
  return format_double(std::get<double>(v_));
}

bool same_value(const Value& a, const Value& b, double rel_tol) {
  if (a.exact() && b.exact()) {
    return a.rational() == b.rational();
  }
  const double x = a.to_double();
  const double y = b.to_double();
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= rel_tol * scale;
}

bool at_most(const Value& a, const Value& b, double rel_tol) {
  if (a.exact() && b.exact()) {
    return a.rational() <= b.rational();
  }
  const double x = a.to_double();
  const double y = b.to_double();
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return x <= y + rel_tol * scale;
}

Value abs_difference(const Value& a, const Value& b) {
  if (a.exact() && b.exact()) {
    Rational d = a.rational() - b.rational();
    return Value(d < 0 ? Rational(-d) : d);
  }
  return Value(std::abs(a.to_double() - b.to_double()));
}

template <>
Rational power<Rational>(std::int64_t base, const ExponentParam& alpha) {
  if (!alpha.exact()) {
    throw std::logic_error("exact power requested for a non-integer exponent");
  }
  if (base < 0) {
    throw std::domain_error("negative base in power");
  }
  const std::int64_t k = alpha.as_integer();
  if (base == 0) {
    if (k < 0) {
      throw std::domain_error("0 raised to a negative exponent");
    }
    return Rational(0);
  }
  const Integer p = boost::multiprecision::pow(Integer(base), static_cast<unsigned>(k < 0 ? -k : k));
  if (k < 0) {
    return Rational(Integer(1), p);
  }
  return Rational(p);
}

template <>
double power<double>(std::int64_t base, const ExponentParam& alpha) {
  if (base < 0) {
    throw std::domain_error("negative base in power");
  }
  if (base == 0) {
    if (alpha.alpha() < 0.0) {
      throw std::domain_error("0 raised to a negative exponent");
    }
    return 0.0;
  }
  return std::pow(static_cast<double>(base), alpha.alpha());
}

}  // namespace zagreb
