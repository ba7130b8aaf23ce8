#include "zagreb/sharpness.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "zagreb/enumerate.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/profile.hpp"

namespace zagreb {

namespace {

struct Evaluation {
  BoundReport report;
  std::optional<Value> direct;
};

Evaluation evaluate(const Graph& g, Domain domain, BoundKind kind, const ExponentParam& alpha) {
  if (domain == Domain::degree) {
    BoundReport r = zagreb_bound(degree_profile(g), alpha, kind);
    if (!r.applicable) {
      return {std::move(r), std::nullopt};
    }
    return {std::move(r), general_first_zagreb(g, alpha).value};
  }
  BoundReport r = leap_bound(two_dist_profile(g), alpha, kind);
  if (!r.applicable) {
    return {std::move(r), std::nullopt};
  }
  return {std::move(r), general_first_leap_zagreb(g, alpha).value};
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string opt_str(const std::optional<Value>& v) { return v ? v->str() : std::string(); }

std::string opt_json(const std::optional<Value>& v) {
  return v ? "\"" + v->str() + "\"" : std::string("null");
}

}  // namespace

std::string_view to_string(BoundShape shape) {
  switch (shape) {
    case BoundShape::secant:
      return "secant";
    case BoundShape::unit_step:
      return "unit_step";
    case BoundShape::remainder:
      return "remainder";
  }
  return "unknown";
}

std::string_view to_string(SharpnessStatus status) {
  switch (status) {
    case SharpnessStatus::attained:
      return "attained";
    case SharpnessStatus::not_attained:
      return "not_attained";
    case SharpnessStatus::configuration_error:
      return "configuration_error";
  }
  return "unknown";
}

BoundKind kind_for(BoundShape shape, const ExponentParam& alpha) {
  switch (shape) {
    case BoundShape::secant:
      return secant_kind_for(alpha);
    case BoundShape::unit_step:
      return unit_step_kind_for(alpha);
    case BoundShape::remainder:
      return BoundKind::remainder;
  }
  return BoundKind::remainder;
}

std::vector<SharpnessRow> verify_sharpness(const SharpnessCase& c) {
  std::vector<SharpnessRow> rows;
  for (const NamedFamily& family : c.instances) {
    const Graph g = build_graph(family);
    for (const ExponentParam& alpha : c.alphas) {
      const BoundKind kind = kind_for(c.shape, alpha);
      Evaluation e = evaluate(g, c.domain, kind, alpha);
      SharpnessRow row{family, c.domain, kind, alpha, e.direct, std::nullopt, std::nullopt,
                       SharpnessStatus::configuration_error, {}};
      if (!e.report.applicable) {
        row.detail = std::string(to_string(e.report.reason->reason)) + ": " + e.report.reason->detail;
      } else {
        row.bound = e.report.bound->value;
        row.gap = check_attainment(e.report, *e.direct);
        row.status = e.report.attained ? SharpnessStatus::attained : SharpnessStatus::not_attained;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::optional<SharpnessCase> natural_case(const NamedFamily& family,
                                          std::vector<ExponentParam> alphas) {
  const auto make = [&](Domain d, BoundShape s) {
    return SharpnessCase{{family}, d, s, std::move(alphas)};
  };
  switch (family.tag) {
    case FamilyTag::figure1:
      return make(Domain::degree, BoundShape::secant);
    case FamilyTag::figure2:
      return make(Domain::degree, BoundShape::unit_step);
    case FamilyTag::figure3:
    case FamilyTag::cycle_pendants:
      return make(Domain::degree, BoundShape::remainder);
    case FamilyTag::figure4:
      return make(Domain::leap, BoundShape::secant);
    case FamilyTag::figure5:
      return make(Domain::leap, BoundShape::unit_step);
    case FamilyTag::figure6:
    case FamilyTag::star_pendants:
      return make(Domain::leap, BoundShape::remainder);
    default:
      return std::nullopt;
  }
}

std::vector<SharpnessCase> standard_sharpness_cases(const std::vector<ExponentParam>& alphas,
                                                    bool extended) {
  std::vector<SharpnessCase> cases;
  for (FamilyTag tag : {FamilyTag::figure1, FamilyTag::figure2, FamilyTag::figure3,
                        FamilyTag::figure4, FamilyTag::figure5, FamilyTag::figure6}) {
    cases.push_back(*natural_case(NamedFamily{tag, {}}, alphas));
  }

  const int max_cycle = extended ? 10 : 6;
  const int max_pendants = extended ? 6 : 4;
  SharpnessCase cycles{{}, Domain::degree, BoundShape::remainder, alphas};
  for (int p = 3; p <= max_cycle; ++p) {
    for (int r = 1; r <= max_pendants; ++r) {
      cycles.instances.push_back(NamedFamily{FamilyTag::cycle_pendants, {p, r}});
    }
  }
  cases.push_back(std::move(cycles));

  const int max_star = extended ? 12 : 8;
  SharpnessCase stars{{}, Domain::leap, BoundShape::remainder, alphas};
  for (int p = 5; p <= max_star; ++p) {
    for (int a = 2; a < p - 2; ++a) {
      stars.instances.push_back(NamedFamily{FamilyTag::star_pendants, {p, a}});
    }
  }
  cases.push_back(std::move(stars));
  return cases;
}

void sort_rows(std::vector<SharpnessRow>& rows) {
  const auto key = [](const SharpnessRow& r) {
    return std::make_tuple(r.family.name(), r.family.params, static_cast<int>(r.domain),
                           static_cast<int>(r.kind), r.alpha.alpha());
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const SharpnessRow& a, const SharpnessRow& b) { return key(a) < key(b); });
}

void write_sharpness_csv(std::ostream& out, const std::vector<SharpnessRow>& rows) {
  out << "family,params,alpha,direct,bound,gap,attained\n";
  for (const auto& r : rows) {
    const char* attained = r.status == SharpnessStatus::attained       ? "true"
                           : r.status == SharpnessStatus::not_attained ? "false"
                                                                       : "error";
    out << r.family.name() << ',' << r.family.params_text() << ',' << r.alpha.str() << ','
        << opt_str(r.direct) << ',' << opt_str(r.bound) << ',' << opt_str(r.gap) << ','
        << attained << '\n';
  }
}

void write_sharpness_json_lines(std::ostream& out, const std::vector<SharpnessRow>& rows) {
  for (const auto& r : rows) {
    out << "{\"family\":\"" << r.family.name() << "\",\"params\":\"" << r.family.params_text()
        << "\",\"domain\":\"" << to_string(r.domain) << "\",\"kind\":\"" << to_string(r.kind)
        << "\",\"alpha\":\"" << r.alpha.str() << "\",\"direct\":" << opt_json(r.direct)
        << ",\"bound\":" << opt_json(r.bound) << ",\"gap\":" << opt_json(r.gap)
        << ",\"status\":\"" << to_string(r.status) << "\"";
    if (!r.detail.empty()) {
      out << ",\"detail\":\"" << json_escape(r.detail) << "\"";
    }
    out << "}\n";
  }
}

std::vector<Graph> scan_for_sharp_instances(int n, Domain domain, BoundKind kind,
                                            const ExponentParam& alpha) {
  std::vector<Graph> hits;
  for_each_connected_graph(n, [&](const Graph& g, std::uint64_t) {
    Evaluation e = evaluate(g, domain, kind, alpha);
    if (e.report.applicable) {
      check_attainment(e.report, *e.direct);
      if (e.report.attained) {
        hits.push_back(g);
      }
    }
  });
  return hits;
}

}  // namespace zagreb
