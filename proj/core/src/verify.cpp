#include "zagreb/verify.hpp"

#include <algorithm>
#include <thread>

#include "zagreb/bounds.hpp"
#include "zagreb/closed_forms.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/profile.hpp"

namespace zagreb {

namespace {

class Recorder {
 public:
  explicit Recorder(GraphVerdict& v) : v_(v) {}

  void expect(bool ok, std::string_view check, const std::string& detail) {
    ++v_.checks;
    if (!ok) {
      v_.failures.push_back(std::string(check) + ": " + detail);
    }
  }

  void expect_equal(const Value& got, const Value& want, std::string_view check,
                    const ExponentParam* alpha = nullptr) {
    std::string where = alpha ? " alpha=" + alpha->str() : std::string();
    expect(same_value(got, want), check, "got " + got.str() + ", want " + want.str() + where);
  }

  void expect_formula(const Checked<IndexValue>& f, const Value& want, std::string_view check,
                      const ExponentParam& alpha) {
    if (!f) {
      expect(false, check,
             "unexpectedly inapplicable (" + std::string(to_string(f.why().reason)) + ")");
      return;
    }
    expect_equal(f->value, want, check, &alpha);
  }

 private:
  GraphVerdict& v_;
};

const BoundKind kAllKinds[] = {BoundKind::secant_convex, BoundKind::secant_concave,
                               BoundKind::unit_step_convex, BoundKind::unit_step_concave,
                               BoundKind::remainder};

void check_structure(Recorder& rec, const RemainderReport& r, std::string_view domain) {
  if (!r.decomposition) {
    return;
  }
  if (r.bi_valued.premise) {
    rec.expect(r.bi_valued.holds(), "structure_bi_valued",
               std::string(domain) + " profile has a value strictly between min and max");
  }
  if (r.truncated.premise) {
    rec.expect(r.truncated.holds(), "structure_truncated",
               std::string(domain) + " profile violates the truncation pattern");
  }
}

void check_bounds(Recorder& rec, const DegreeProfile& dp, const TwoDistProfile& tp,
                  const std::optional<Value>& zagreb, const std::optional<Value>& leap,
                  const ExponentParam& a) {
  for (BoundKind kind : kAllKinds) {
    if (zagreb && !dp.regular()) {
      const BoundReport r = zagreb_bound(dp, a, kind);
      if (r.applicable) {
        rec.expect(respects(r, *zagreb), "bound_direction",
                   "degree " + std::string(to_string(kind)) + " alpha=" + a.str() + ": index " +
                       zagreb->str() + " vs " + std::string(to_string(r.direction)) + " " +
                       r.bound->value.str());
      }
    }
    if (leap) {
      const BoundReport r = leap_bound(tp, a, kind);
      if (r.applicable) {
        rec.expect(respects(r, *leap), "bound_direction",
                   "leap " + std::string(to_string(kind)) + " alpha=" + a.str() + ": index " +
                       leap->str() + " vs " + std::string(to_string(r.direction)) + " " +
                       r.bound->value.str());
      }
    }
  }
}

}  // namespace

GraphVerdict verify_graph(const Graph& g, std::span<const ExponentParam> alphas) {
  GraphVerdict verdict;
  Recorder rec(verdict);
  const DegreeProfile dp = degree_profile(g);
  const TwoDistProfile tp = two_dist_profile(g);
  const auto n = static_cast<std::int64_t>(g.vertex_count());

  std::int64_t degree_sum = 0;
  for (const auto& [deg, count] : dp.freq) {
    degree_sum += deg * count;
  }
  rec.expect(degree_sum == 2 * dp.edges, "handshake", "sum of degrees != 2m");

  const bool leap_case = tp.c3c4_free && tp.min_degree >= 1 && tp.max_degree != tp.min_degree &&
                         tp.max_degree >= 2;
  if (tp.c3c4_free) {
    std::int64_t two_sum = 0;
    for (const auto& [value, count] : tp.freq) {
      two_sum += value * count;
    }
    rec.expect(two_sum == tp.leap_total(), "two_distance_sum", "sum of d2 != M1 - 2m");

    const Value leap_coindex = first_leap_zagreb_coindex(g).value;
    const Value lm1 = general_first_leap_zagreb(g, ExponentParam::of(2)).value;
    const Rational lhs = lm1.rational() + leap_coindex.rational();
    const Rational rhs = Rational((n - 1) * tp.leap_total());
    rec.expect(lhs == rhs, "leap_sum_identity",
               "LM1 + coindex = " + to_string(lhs) + ", (n-1)(M1-2m) = " + to_string(rhs));
    if (leap_case) {
      for (auto variant : {LeapCoindexVariant::secant, LeapCoindexVariant::unit_step}) {
        const auto f = leap_coindex_formula(tp, variant);
        rec.expect_formula(f, leap_coindex,
                           variant == LeapCoindexVariant::secant ? "leap_coindex_secant"
                                                                 : "leap_coindex_unit_step",
                           ExponentParam::of(2));
      }
    }
  }
  const bool isolated = dp.min_degree == 0;

  for (const ExponentParam& a : alphas) {
    std::optional<Value> zagreb;
    if (!isolated || a.alpha() > 0) {
      zagreb = general_first_zagreb(g, a).value;
    }
    std::optional<Value> leap;
    if (tp.min_degree >= 1 || a.alpha() > 0) {
      leap = general_first_leap_zagreb(g, a).value;
    }

    if (zagreb && !dp.regular()) {
      rec.expect_formula(zagreb_formula_min_anchored(dp, a), *zagreb, "zagreb_formula_min", a);
      rec.expect_formula(zagreb_formula_minplus_anchored(dp, a), *zagreb,
                         "zagreb_formula_min_plus_one", a);
    }

    if (a.alpha() > 0 && n >= 1) {
      const Value coindex = general_first_zagreb_coindex(g, a).value;
      const Value next = general_first_zagreb(g, a.plus_one()).value;
      const Value identity = evaluate_in_mode(a, [&](auto tag) {
        using T = decltype(tag);
        if constexpr (std::is_same_v<T, double>) {
          return static_cast<double>(n - 1) * zagreb->to_double() - next.to_double();
        } else {
          return Rational(n - 1) * zagreb->rational() - next.rational();
        }
      });
      rec.expect_equal(coindex, identity, "coindex_identity", &a);
      if (a.alpha() > 1 && !dp.regular()) {
        rec.expect_formula(zagreb_coindex_formula(dp, a, Anchor::min), coindex,
                           "coindex_formula_min", a);
        rec.expect_formula(zagreb_coindex_formula(dp, a, Anchor::min_plus_one), coindex,
                           "coindex_formula_min_plus_one", a);
      }
    }

    if (leap_case && leap) {
      rec.expect_formula(leap_formula(tp, a, Anchor::min), *leap, "leap_formula_min", a);
      rec.expect_formula(leap_formula(tp, a, Anchor::min_plus_one), *leap,
                         "leap_formula_min_plus_one", a);
    }
    if (tp.c3c4_free && tp.min_degree == 0 && a.alpha() > 0 && leap) {
      rec.expect_formula(leap_formula_d_zero(tp, a, DZeroVariant::simplified), *leap,
                         "leap_d_zero_simplified", a);
      if (tp.max_degree >= 2) {
        rec.expect_formula(leap_formula_d_zero(tp, a, DZeroVariant::anchored), *leap,
                           "leap_d_zero_anchored", a);
      }
    }

    check_bounds(rec, dp, tp, zagreb, leap, a);
    if (!dp.regular()) {
      check_structure(rec, zagreb_remainder_bound(dp, a), "degree");
    }
    check_structure(rec, leap_remainder_bound(tp, a), "leap");
  }
  return verdict;
}

std::vector<MaskVerdict> verify_order(int n, std::span<const ExponentParam> alphas,
                                      unsigned jobs) {
  jobs = std::max(1u, jobs);
  std::vector<std::vector<MaskVerdict>> shards(jobs);
  const auto work = [&](unsigned shard) {
    for_each_connected_graph(n, partition(n, shard, jobs), [&](const Graph& g, std::uint64_t mask) {
      shards[shard].push_back({mask, verify_graph(g, alphas)});
    });
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < jobs; ++s) {
      threads.emplace_back(work, s);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  std::vector<MaskVerdict> out;
  for (auto& shard : shards) {
    std::move(shard.begin(), shard.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace zagreb
