#include "zagreb/bounds.hpp"

#include <stdexcept>
#include <string>

#include "elimination.hpp"

namespace zagreb {

using detail::Spectrum;

namespace {

bool kind_accepts(BoundKind kind, const ExponentParam& a) {
  switch (kind) {
    case BoundKind::secant_convex:
    case BoundKind::unit_step_convex:
      return a.convex_regime();
    case BoundKind::secant_concave:
    case BoundKind::unit_step_concave:
      return a.concave_regime();
    case BoundKind::remainder:
      return a.convex_regime() || a.concave_regime();
  }
  return false;
}

Direction direction_of(BoundKind kind, const ExponentParam& a) {
  switch (kind) {
    case BoundKind::secant_convex:
    case BoundKind::unit_step_concave:
      return Direction::upper;
    case BoundKind::secant_concave:
    case BoundKind::unit_step_convex:
      return Direction::lower;
    case BoundKind::remainder:
      return a.convex_regime() ? Direction::upper : Direction::lower;
  }
  return Direction::upper;
}

BoundReport refuse(BoundReport report, Reason reason, std::string detail) {
  report.applicable = false;
  report.reason = Inapplicability{reason, std::move(detail)};
  report.bound.reset();
  return report;
}

BoundReport start(Domain domain, BoundKind kind, const ExponentParam& a) {
  BoundReport r{domain, kind, a, direction_of(kind, a), false, std::nullopt, std::nullopt, false};
  return r;
}

IndexKind index_for(Domain domain) {
  return domain == Domain::degree ? IndexKind::general_zagreb : IndexKind::general_leap_zagreb;
}

// Secant / unit-step bound on an already validated spectrum.
BoundReport elimination_bound(BoundReport report, const Spectrum& s, const ExponentParam& a) {
  if (!kind_accepts(report.kind, a)) {
    return refuse(std::move(report), Reason::alpha_out_of_range,
                  std::string(to_string(report.kind)) + " does not cover alpha = " + a.str());
  }
  const bool secant =
      report.kind == BoundKind::secant_convex || report.kind == BoundKind::secant_concave;
  Value v = evaluate_in_mode(a, [&](auto tag) {
    using T = decltype(tag);
    if (secant) {
      return detail::secant_base<T>(s, a);
    }
    T base = detail::unit_step_base<T>(s, a);
    if (s.hi >= 3) {
      base += detail::unit_step_top_gap<T>(s, a);
    }
    return base;
  });
  report.applicable = true;
  report.bound = IndexValue{index_for(report.domain), std::move(v)};
  return report;
}

StructureCheck bi_valued_check(const Spectrum& s, const RemainderDecomposition& dec) {
  const auto top = s.freq->find(s.hi);
  const std::int64_t n_top = top == s.freq->end() ? 0 : top->second;
  StructureCheck c;
  c.premise = dec.remainder == 0 && n_top == dec.quotient;
  c.conclusion = true;
  for (const auto& [value, count] : *s.freq) {
    if (value != s.lo && value != s.hi) {
      c.conclusion = false;
    }
  }
  return c;
}

StructureCheck truncated_check(const Spectrum& s, const RemainderDecomposition& dec) {
  const auto top = s.freq->find(s.hi);
  const std::int64_t n_top = top == s.freq->end() ? 0 : top->second;
  StructureCheck c;
  c.premise = dec.remainder >= 1 && n_top == dec.quotient;
  c.conclusion = true;
  const std::int64_t pivot = s.lo + dec.remainder;
  for (const auto& [value, count] : *s.freq) {
    if (value > pivot && value < s.hi) {
      c.conclusion = false;
    }
    if (value == pivot && count > 1) {
      c.conclusion = false;
    }
  }
  return c;
}

// Shared remainder analysis. `minimum_top` is the least admissible maximum
// (3 for degrees; implied by d >= 1 and D - d >= 2 for 2-distance degrees).
RemainderReport remainder_analysis(Domain domain, const Spectrum& s, const ExponentParam& a,
                                   std::int64_t minimum_top) {
  RemainderReport out{std::nullopt, start(domain, BoundKind::remainder, a), {}, {}};
  const std::int64_t span = s.hi - s.lo;
  if (span < 1) {
    out.bound = refuse(std::move(out.bound), Reason::regular_profile, "profile is regular");
    return out;
  }
  const RemainderDecomposition dec = decompose(s.excess(), span);
  out.decomposition = dec;
  out.bi_valued = bi_valued_check(s, dec);
  out.truncated = truncated_check(s, dec);

  if (s.hi < minimum_top) {
    out.bound = refuse(std::move(out.bound), Reason::max_degree_below_three,
                       "maximum " + std::to_string(s.hi) + " is below 3");
    return out;
  }
  if (span < 2) {
    out.bound = refuse(std::move(out.bound), Reason::span_below_two, "max - min = 1");
    return out;
  }
  if (dec.quotient < 1) {
    out.bound = refuse(std::move(out.bound), Reason::zero_quotient,
                       "total " + std::to_string(dec.total) + " is below the span");
    return out;
  }
  if (dec.remainder == 0) {
    out.bound = refuse(std::move(out.bound), Reason::zero_remainder,
                       "total is a multiple of the span");
    return out;
  }
  const auto pivot = s.freq->find(s.lo + dec.remainder);
  if (pivot == s.freq->end()) {
    out.bound = refuse(std::move(out.bound), Reason::missing_remainder_vertex,
                       "no vertex with value min + r = " + std::to_string(s.lo + dec.remainder));
    return out;
  }
  Value v = evaluate_in_mode(a, [&](auto tag) {
    using T = decltype(tag);
    return detail::secant_base<T>(s, a) + detail::secant_gap<T>(s.lo, s.hi, dec.remainder, a);
  });
  out.bound.applicable = true;
  out.bound.bound = IndexValue{index_for(domain), std::move(v)};
  return out;
}

std::optional<Inapplicability> leap_hypotheses(const TwoDistProfile& p) {
  if (!p.c3c4_free) {
    return Inapplicability{Reason::not_c3c4_free, "source graph contains a triangle or quadrangle"};
  }
  if (p.min_degree == 0) {
    return Inapplicability{Reason::zero_min_two_degree, "minimum 2-distance degree is 0"};
  }
  if (p.min_degree == p.max_degree) {
    return Inapplicability{Reason::regular_profile, "2-distance profile is regular"};
  }
  if (p.max_degree < 2) {
    return Inapplicability{Reason::max_two_degree_below_two, "maximum 2-distance degree below 2"};
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Domain domain) {
  return domain == Domain::degree ? "degree" : "leap";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::upper ? "upper" : "lower";
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::secant_convex:
      return "secant_convex";
    case BoundKind::secant_concave:
      return "secant_concave";
    case BoundKind::unit_step_convex:
      return "unit_step_convex";
    case BoundKind::unit_step_concave:
      return "unit_step_concave";
    case BoundKind::remainder:
      return "remainder";
  }
  return "unknown";
}

BoundKind parse_bound_kind(std::string_view text) {
  for (BoundKind k : {BoundKind::secant_convex, BoundKind::secant_concave,
                      BoundKind::unit_step_convex, BoundKind::unit_step_concave,
                      BoundKind::remainder}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  throw std::invalid_argument("unknown bound kind '" + std::string(text) + "'");
}

RemainderDecomposition decompose(std::int64_t total, std::int64_t span) {
  if (span < 1 || total < 0) {
    throw std::invalid_argument("decompose needs span >= 1 and total >= 0");
  }
  return {total / span, total % span, span, total};
}

BoundKind secant_kind_for(const ExponentParam& a) {
  return a.concave_regime() ? BoundKind::secant_concave : BoundKind::secant_convex;
}

BoundKind unit_step_kind_for(const ExponentParam& a) {
  return a.concave_regime() ? BoundKind::unit_step_concave : BoundKind::unit_step_convex;
}

BoundReport zagreb_bound(const DegreeProfile& prof, const ExponentParam& alpha, BoundKind kind) {
  if (kind == BoundKind::remainder) {
    return zagreb_remainder_bound(prof, alpha).bound;
  }
  BoundReport report = start(Domain::degree, kind, alpha);
  if (prof.regular()) {
    return refuse(std::move(report), Reason::regular_profile, "profile is regular");
  }
  return elimination_bound(std::move(report), detail::degree_spectrum(prof), alpha);
}

RemainderReport zagreb_remainder_bound(const DegreeProfile& prof, const ExponentParam& alpha) {
  return remainder_analysis(Domain::degree, detail::degree_spectrum(prof), alpha, 3);
}

BoundReport leap_bound(const TwoDistProfile& prof, const ExponentParam& alpha, BoundKind kind) {
  if (kind == BoundKind::remainder) {
    return leap_remainder_bound(prof, alpha).bound;
  }
  BoundReport report = start(Domain::leap, kind, alpha);
  if (auto why = leap_hypotheses(prof)) {
    return refuse(std::move(report), why->reason, why->detail);
  }
  return elimination_bound(std::move(report), detail::leap_spectrum(prof), alpha);
}

RemainderReport leap_remainder_bound(const TwoDistProfile& prof, const ExponentParam& alpha) {
  const Spectrum s = detail::leap_spectrum(prof);
  if (auto why = leap_hypotheses(prof)) {
    RemainderReport out{std::nullopt, start(Domain::leap, BoundKind::remainder, alpha), {}, {}};
    if (prof.max_degree > prof.min_degree) {
      const auto dec = decompose(s.excess(), s.hi - s.lo);
      out.decomposition = dec;
      out.bi_valued = bi_valued_check(s, dec);
      out.truncated = truncated_check(s, dec);
    }
    out.bound = refuse(std::move(out.bound), why->reason, why->detail);
    return out;
  }
  return remainder_analysis(Domain::leap, s, alpha, 0);
}

bool respects(const BoundReport& report, const Value& direct) {
  if (!report.applicable) {
    return true;
  }
  const Value& b = report.bound->value;
  return report.direction == Direction::upper ? at_most(direct, b) : at_most(b, direct);
}

std::optional<Value> check_attainment(BoundReport& report, const Value& direct) {
  if (!report.applicable) {
    report.attained = false;
    return std::nullopt;
  }
  report.attained = same_value(direct, report.bound->value);
  return abs_difference(direct, report.bound->value);
}

}  // namespace zagreb
