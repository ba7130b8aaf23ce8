#include "zagreb/closed_forms.hpp"

#include <optional>

#include "elimination.hpp"

namespace zagreb {

using detail::Spectrum;

namespace {

std::string range_text(std::int64_t lo, std::int64_t hi) {
  return "min=" + std::to_string(lo) + ", max=" + std::to_string(hi);
}

std::optional<Inapplicability> degree_preconditions(const DegreeProfile& p) {
  if (p.regular()) {
    return Inapplicability{Reason::regular_profile,
                           "profile is regular (" + range_text(p.min_degree, p.max_degree) + ")"};
  }
  return std::nullopt;
}

std::optional<Inapplicability> leap_preconditions(const TwoDistProfile& p) {
  if (!p.c3c4_free) {
    return Inapplicability{Reason::not_c3c4_free, "source graph contains a triangle or quadrangle"};
  }
  if (p.min_degree == 0) {
    return Inapplicability{Reason::zero_min_two_degree,
                           "minimum 2-distance degree is 0; use leap_formula_d_zero"};
  }
  if (p.min_degree == p.max_degree) {
    return Inapplicability{Reason::regular_profile,
                           "2-distance profile is regular (" +
                               range_text(p.min_degree, p.max_degree) + ")"};
  }
  if (p.max_degree < 2) {
    return Inapplicability{Reason::max_two_degree_below_two, "maximum 2-distance degree below 2"};
  }
  return std::nullopt;
}

IndexValue evaluate_form(const Spectrum& s, const ExponentParam& a, Anchor anchor, IndexKind kind) {
  Value v = evaluate_in_mode(a, [&](auto tag) {
    using T = decltype(tag);
    return anchor == Anchor::min ? detail::secant_form<T>(s, a) : detail::unit_step_form<T>(s, a);
  });
  return {kind, std::move(v)};
}

}  // namespace

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::regular_profile:
      return "regular_profile";
    case Reason::alpha_out_of_range:
      return "alpha_out_of_range";
    case Reason::not_c3c4_free:
      return "not_c3c4_free";
    case Reason::zero_min_two_degree:
      return "zero_min_two_degree";
    case Reason::nonzero_min_two_degree:
      return "nonzero_min_two_degree";
    case Reason::max_two_degree_below_two:
      return "max_two_degree_below_two";
    case Reason::max_degree_below_three:
      return "max_degree_below_three";
    case Reason::span_below_two:
      return "span_below_two";
    case Reason::zero_quotient:
      return "zero_quotient";
    case Reason::zero_remainder:
      return "zero_remainder";
    case Reason::missing_remainder_vertex:
      return "missing_remainder_vertex";
  }
  return "unknown";
}

Value lemma_gap_term(std::int64_t p, std::int64_t q, std::int64_t i, const ExponentParam& alpha,
                     GapVariant variant) {
  if (p < 1 || q <= p) {
    throw std::out_of_range("lemma gap term needs 0 < p < q");
  }
  if (variant == GapVariant::secant && (i < 1 || i > q - p - 1)) {
    throw std::out_of_range("secant gap term needs 1 <= i <= q - p - 1");
  }
  if (variant == GapVariant::unit_step && (i < 2 || i > q - p)) {
    throw std::out_of_range("unit-step gap term needs 2 <= i <= q - p");
  }
  return evaluate_in_mode(alpha, [&](auto tag) {
    using T = decltype(tag);
    return variant == GapVariant::secant ? detail::secant_gap<T>(p, q, i, alpha)
                                         : detail::unit_step_gap<T>(p, i, alpha);
  });
}

Checked<IndexValue> zagreb_formula_min_anchored(const DegreeProfile& prof, const ExponentParam& alpha) {
  if (auto why = degree_preconditions(prof)) {
    return *why;
  }
  return evaluate_form(detail::degree_spectrum(prof), alpha, Anchor::min, IndexKind::general_zagreb);
}

Checked<IndexValue> zagreb_formula_minplus_anchored(const DegreeProfile& prof,
                                                    const ExponentParam& alpha) {
  if (auto why = degree_preconditions(prof)) {
    return *why;
  }
  return evaluate_form(detail::degree_spectrum(prof), alpha, Anchor::min_plus_one,
                       IndexKind::general_zagreb);
}

Checked<IndexValue> zagreb_coindex_formula(const DegreeProfile& prof, const ExponentParam& alpha,
                                           Anchor anchor) {
  if (alpha.alpha() <= 1.0) {
    return Inapplicability{Reason::alpha_out_of_range,
                           "coindex closed form needs alpha > 1 (got " + alpha.str() + ")"};
  }
  if (auto why = degree_preconditions(prof)) {
    return *why;
  }
  const Spectrum s = detail::degree_spectrum(prof);
  const ExponentParam next = alpha.plus_one();
  Value v = evaluate_in_mode(alpha, [&](auto tag) {
    using T = decltype(tag);
    const auto form = [&](const ExponentParam& a) {
      return anchor == Anchor::min ? detail::secant_form<T>(s, a) : detail::unit_step_form<T>(s, a);
    };
    return from_int<T>(s.n - 1) * form(alpha) - form(next);
  });
  return IndexValue{IndexKind::general_zagreb_coindex, std::move(v)};
}

Checked<IndexValue> leap_formula(const TwoDistProfile& prof, const ExponentParam& alpha,
                                 Anchor anchor) {
  if (auto why = leap_preconditions(prof)) {
    return *why;
  }
  return evaluate_form(detail::leap_spectrum(prof), alpha, anchor, IndexKind::general_leap_zagreb);
}

Checked<IndexValue> leap_coindex_formula(const TwoDistProfile& prof, LeapCoindexVariant variant) {
  if (auto why = leap_preconditions(prof)) {
    return *why;
  }
  const Integer n = prof.vertices;
  const Integer d = prof.min_degree;
  const Integer D = prof.max_degree;
  const Integer w = prof.leap_total();
  Integer result;
  if (variant == LeapCoindexVariant::secant) {
    result = w * (n - 1 - D - d) + n * d * D;
    for (const auto& [value, count] : prof.freq) {
      if (value > prof.min_degree && value < prof.max_degree) {
        const Integer i = value - prof.min_degree;
        result -= count * (i * (d + i - D));
      }
    }
  } else {
    result = w * (n - 2 * d - 2) + n * d * (d + 1);
    for (const auto& [value, count] : prof.freq) {
      if (value >= prof.min_degree + 2) {
        const Integer i = value - prof.min_degree;
        result -= count * (i * (i - 1));
      }
    }
  }
  return IndexValue{IndexKind::leap_zagreb_coindex, Value(Rational(result))};
}

Checked<IndexValue> leap_formula_d_zero(const TwoDistProfile& prof, const ExponentParam& alpha,
                                        DZeroVariant variant) {
  if (alpha.alpha() < 0.0) {
    throw std::domain_error("leap index with a zero 2-distance degree needs alpha > 0");
  }
  if (!prof.c3c4_free) {
    return Inapplicability{Reason::not_c3c4_free, "source graph contains a triangle or quadrangle"};
  }
  if (prof.min_degree != 0) {
    return Inapplicability{Reason::nonzero_min_two_degree,
                           "minimum 2-distance degree is " + std::to_string(prof.min_degree)};
  }

  if (variant == DZeroVariant::simplified) {
    Value v = evaluate_in_mode(alpha, [&](auto tag) {
      using T = decltype(tag);
      T total = from_int<T>(prof.leap_total());
      for (const auto& [value, count] : prof.freq) {
        if (value >= 2) {
          total += from_int<T>(count) * (power<T>(value, alpha) - from_int<T>(value));
        }
      }
      return total;
    });
    return IndexValue{IndexKind::general_leap_zagreb, std::move(v)};
  }

  if (prof.max_degree < 2) {
    return Inapplicability{Reason::max_two_degree_below_two,
                           "anchored form needs maximum 2-distance degree >= 2"};
  }
  // Secant elimination between 1 and D over the n - n0 vertices with d2 >= 1.
  const Spectrum nonzero{prof.vertices - prof.count(0), 1, prof.max_degree, prof.leap_total(),
                         &prof.freq};
  return evaluate_form(nonzero, alpha, Anchor::min, IndexKind::general_leap_zagreb);
}

}  // namespace zagreb
