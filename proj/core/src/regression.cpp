#include "zagreb/regression.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace zagreb {

RegressionResult fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("fit: xs and ys differ in length");
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("fit: need at least 3 points");
  }

  // Running means and co-moments (Welford), accumulated in extended
  // precision: the intercept ybar - b xbar cancels badly when |b xbar| is
  // large next to the intercept.
  using Acc = long double;
  Acc mean_x = 0, mean_y = 0;
  Acc cxx = 0, cyy = 0, cxy = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Acc x = xs[i];
    const Acc y = ys[i];
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw std::invalid_argument("fit: non-finite value at index " + std::to_string(i));
    }
    ++k;
    const Acc dx = x - mean_x;
    const Acc dy = y - mean_y;
    mean_x += dx / static_cast<Acc>(k);
    mean_y += dy / static_cast<Acc>(k);
    cxx += dx * (x - mean_x);
    cyy += dy * (y - mean_y);
    cxy += dx * (y - mean_y);
  }
  if (cxx <= 0) {
    throw std::invalid_argument("fit: all xs are equal");
  }

  RegressionResult r;
  r.n_points = k;
  const Acc slope = cxy / cxx;
  r.slope = static_cast<double>(slope);
  r.intercept = static_cast<double>(mean_y - slope * mean_x);
  // Constant ys give a perfect horizontal fit; the correlation is reported as 0.
  r.pearson_r =
      cyy > 0 ? std::clamp(static_cast<double>(cxy / std::sqrt(cxx * cyy)), -1.0, 1.0) : 0.0;

  const Acc sse = std::max(Acc{0}, cyy - slope * cxy);
  const Acc variance = sse / static_cast<Acc>(k - 2);
  r.residual_stderr = static_cast<double>(std::sqrt(variance));
  r.slope_stderr = static_cast<double>(std::sqrt(variance / cxx));
  r.intercept_stderr = static_cast<double>(
      std::sqrt(variance * (1 / static_cast<Acc>(k) + mean_x * mean_x / cxx)));
  return r;
}

std::string_view to_string(Descriptor d) {
  return d == Descriptor::first_zagreb ? "M1" : "LM1";
}

std::string_view to_string(Property p) {
  return p == Property::entropy ? "entropy" : "boiling_point";
}

std::vector<ModelRow> reproduce_models(std::span<const CompoundRecord> records) {
  std::vector<ModelRow> rows;
  for (Property prop : {Property::entropy, Property::boiling_point}) {
    for (Descriptor desc : {Descriptor::first_zagreb, Descriptor::leap_zagreb}) {
      std::vector<double> xs, ys;
      for (const auto& rec : records) {
        const auto& y = prop == Property::entropy ? rec.entropy : rec.boiling_point;
        if (!y) {
          continue;
        }
        xs.push_back(static_cast<double>(desc == Descriptor::first_zagreb ? rec.first_zagreb
                                                                          : rec.leap_zagreb));
        ys.push_back(*y);
      }
      ModelRow row{desc, prop, xs.size(), std::nullopt, {}};
      if (xs.size() < 3) {
        row.gap = "only " + std::to_string(xs.size()) + " record(s) with " +
                  std::string(to_string(prop));
      } else {
        try {
          row.result = fit(xs, ys);
        } catch (const std::invalid_argument& e) {
          row.gap = e.what();
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::span<const ReferenceModel> reference_models() {
  static constexpr std::array<ReferenceModel, 4> kModels{{
      {Descriptor::first_zagreb, Property::entropy, 22, 0.923654, 62.277, 0.416},
      {Descriptor::leap_zagreb, Property::entropy, 22, 0.867332963, 76.29013499, 0.127338078},
      {Descriptor::first_zagreb, Property::boiling_point, 21, 0.992773893, 58.08410846,
       3.628596366},
      {Descriptor::leap_zagreb, Property::boiling_point, 21, 0.9656, 171.6991, 1.1451},
  }};
  return kModels;
}

}  // namespace zagreb
