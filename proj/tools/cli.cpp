#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "zagreb/bounds.hpp"
#include "zagreb/edge_list.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/profile.hpp"
#include "zagreb/regression.hpp"
#include "zagreb/sharpness.hpp"
#include "zagreb/verify.hpp"

namespace zagreb::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<double> alphas;
  std::string format = "csv";
  std::string graph;
  std::string family;
  int min_n = 1;
  int max_n = 6;
  std::string bound;
  std::string dataset;
  unsigned jobs = 1;
  std::string write_edges;
  bool extended = false;
};

struct Source {
  std::string label;
  std::optional<Graph> graph;
  std::optional<DegreeProfile> profile;  // profile-only families
  std::optional<NamedFamily> family;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::string opt_str(const std::optional<Value>& v) { return v ? v->str() : std::string(); }

Json opt_json(const std::optional<Value>& v) { return v ? Json(v->str()) : Json(nullptr); }

std::vector<ExponentParam> exponents(const Options& o, std::vector<double> fallback) {
  const std::vector<double>& raw = o.alphas.empty() ? fallback : o.alphas;
  std::vector<ExponentParam> out;
  for (double a : raw) {
    try {
      out.push_back(ExponentParam::of(a));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--alpha: ") + e.what());
    }
  }
  return out;
}

Source load_source(const Options& o) {
  if (o.graph.empty() == o.family.empty()) {
    throw UsageError("exactly one of --graph or --family is required");
  }
  Source s;
  if (!o.graph.empty()) {
    s.label = o.graph;
    try {
      s.graph = read_edge_list_file(o.graph);
    } catch (const std::exception& e) {
      throw UsageError(o.graph + ": " + e.what());
    }
    return s;
  }
  try {
    s.family = NamedFamily::parse(o.family);
    auto built = build_named(*s.family);
    if (auto* g = std::get_if<Graph>(&built)) {
      s.graph = std::move(*g);
    } else {
      s.profile = std::get<DegreeProfile>(built);
    }
  } catch (const std::exception& e) {
    throw UsageError(std::string("--family: ") + e.what());
  }
  s.label = s.family->label();
  return s;
}

DegreeProfile profile_of(const Source& s) {
  return s.graph ? degree_profile(*s.graph) : *s.profile;
}

// Sum of n_i * i^alpha straight from the degree counts.
std::optional<Value> power_sum(const DegreeProfile& p, const ExponentParam& a) {
  if (p.min_degree == 0 && a.alpha() < 0) {
    return std::nullopt;
  }
  return evaluate_in_mode(a, [&](auto tag) {
    using T = decltype(tag);
    T sum = from_int<T>(0);
    for (const auto& [deg, count] : p.freq) {
      sum += from_int<T>(count) * power<T>(deg, a);
    }
    return sum;
  });
}

template <class Fn>
std::optional<Value> try_value(Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- compute

int cmd_compute(const Options& o, std::ostream& out) {
  const Source src = load_source(o);
  const auto alphas = exponents(o, {2.0});
  if (!o.write_edges.empty()) {
    if (!src.graph) {
      throw UsageError("--write-edges needs a graph, not a degree profile");
    }
    std::ofstream f(o.write_edges);
    if (!f) {
      throw UsageError("cannot write " + o.write_edges);
    }
    write_edge_list(f, *src.graph);
  }

  const DegreeProfile prof = profile_of(src);
  std::optional<Value> leap_coindex;
  if (src.graph) {
    leap_coindex = first_leap_zagreb_coindex(*src.graph).value;
  }
  if (o.format == "csv") {
    out << "source,alpha,n,m,M1,M1_coindex,LM1,LM1_coindex\n";
  }
  for (const auto& a : alphas) {
    std::optional<Value> m1, coindex, lm1;
    if (src.graph) {
      const Graph& g = *src.graph;
      m1 = try_value([&] { return general_first_zagreb(g, a).value; });
      coindex = try_value([&] { return general_first_zagreb_coindex(g, a).value; });
      lm1 = try_value([&] { return general_first_leap_zagreb(g, a).value; });
    } else {
      m1 = power_sum(prof, a);
      if (a.alpha() > 0) {
        const auto next = power_sum(prof, a.plus_one());
        coindex = evaluate_in_mode(a, [&](auto tag) {
          using T = decltype(tag);
          if constexpr (std::is_same_v<T, double>) {
            return static_cast<double>(prof.vertices - 1) * m1->to_double() - next->to_double();
          } else {
            return Rational(prof.vertices - 1) * m1->rational() - next->rational();
          }
        });
      }
    }
    if (o.format == "csv") {
      out << csv_field(src.label) << ',' << a.str() << ',' << prof.vertices << ',' << prof.edges
          << ',' << opt_str(m1) << ',' << opt_str(coindex) << ',' << opt_str(lm1) << ','
          << opt_str(leap_coindex) << '\n';
    } else {
      Json j;
      j["source"] = src.label;
      j["alpha"] = a.str();
      j["n"] = prof.vertices;
      j["m"] = prof.edges;
      j["M1"] = opt_json(m1);
      j["M1_coindex"] = opt_json(coindex);
      j["LM1"] = opt_json(lm1);
      j["LM1_coindex"] = opt_json(leap_coindex);
      out << j.dump() << '\n';
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- bounds

int cmd_bounds(const Options& o, std::ostream& out) {
  const Source src = load_source(o);
  const auto alphas = exponents(o, {2.0});
  std::vector<BoundKind> kinds;
  if (o.bound.empty()) {
    kinds = {BoundKind::secant_convex, BoundKind::secant_concave, BoundKind::unit_step_convex,
             BoundKind::unit_step_concave, BoundKind::remainder};
  } else {
    try {
      kinds = {parse_bound_kind(o.bound)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--bound: ") + e.what());
    }
  }
  std::vector<Domain> domains{Domain::degree};
  std::optional<TwoDistProfile> two;
  if (src.graph) {
    domains.push_back(Domain::leap);
    two = two_dist_profile(*src.graph);
  }
  const DegreeProfile prof = profile_of(src);

  if (o.format == "csv") {
    out << "source,domain,kind,alpha,direction,applicable,bound,index,respected,attained,reason\n";
  }
  bool all_respected = true;
  for (Domain domain : domains) {
    for (BoundKind kind : kinds) {
      for (const auto& a : alphas) {
        BoundReport r = domain == Domain::degree ? zagreb_bound(prof, a, kind)
                                                 : leap_bound(*two, a, kind);
        std::optional<Value> index;
        if (domain == Domain::degree) {
          index = src.graph ? try_value([&] { return general_first_zagreb(*src.graph, a).value; })
                            : power_sum(prof, a);
        } else {
          index = try_value([&] { return general_first_leap_zagreb(*src.graph, a).value; });
        }
        std::optional<bool> respected;
        if (r.applicable && index) {
          respected = respects(r, *index);
          check_attainment(r, *index);
          all_respected = all_respected && *respected;
        }
        const std::string reason =
            r.reason ? std::string(to_string(r.reason->reason)) + ": " + r.reason->detail : "";
        const std::optional<Value> bound =
            r.bound ? std::optional<Value>(r.bound->value) : std::nullopt;
        if (o.format == "csv") {
          out << csv_field(src.label) << ',' << to_string(domain) << ',' << to_string(kind) << ','
              << a.str() << ',' << to_string(r.direction) << ','
              << (r.applicable ? "true" : "false") << ',' << opt_str(bound) << ','
              << opt_str(index) << ',' << (respected ? (*respected ? "true" : "false") : "") << ','
              << (r.applicable ? (r.attained ? "true" : "false") : "") << ','
              << csv_field(reason) << '\n';
        } else {
          Json j;
          j["source"] = src.label;
          j["domain"] = to_string(domain);
          j["kind"] = to_string(kind);
          j["alpha"] = a.str();
          j["direction"] = to_string(r.direction);
          j["applicable"] = r.applicable;
          j["bound"] = opt_json(bound);
          j["index"] = opt_json(index);
          j["respected"] = respected ? Json(*respected) : Json(nullptr);
          j["attained"] = r.applicable ? Json(r.attained) : Json(nullptr);
          j["reason"] = r.reason ? Json(reason) : Json(nullptr);
          out << j.dump() << '\n';
        }
      }
    }
  }
  return all_respected ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- sharpness

int cmd_sharpness(const Options& o, std::ostream& out) {
  if (!o.graph.empty()) {
    throw UsageError("sharpness works on --family (or the standard cases without it)");
  }
  const auto alphas = exponents(o, {2.0, 0.5});
  std::vector<SharpnessCase> cases;
  if (o.family.empty()) {
    cases = standard_sharpness_cases(alphas, o.extended);
  } else {
    NamedFamily family;
    try {
      family = NamedFamily::parse(o.family);
      validate(family);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--family: ") + e.what());
    }
    auto c = natural_case(family, alphas);
    if (!c) {
      throw UsageError("family '" + family.name() + "' has no associated bound");
    }
    cases.push_back(std::move(*c));
  }
  std::vector<SharpnessRow> rows;
  for (const auto& c : cases) {
    auto part = verify_sharpness(c);
    std::move(part.begin(), part.end(), std::back_inserter(rows));
  }
  if (o.format == "csv") {
    write_sharpness_csv(out, rows);
  } else {
    write_sharpness_json_lines(out, rows);
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const SharpnessRow& r) {
    return r.status == SharpnessStatus::attained;
  });
  return all ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------ verify-identities

void check_order_range(const Options& o) {
  if (o.min_n < 1 || o.max_n > kMaxEnumerationOrder || o.min_n > o.max_n) {
    throw UsageError("orders must satisfy 1 <= --min-n <= --max-n <= " +
                     std::to_string(kMaxEnumerationOrder));
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_order_range(o);
  const auto alphas = exponents(o, {-1.0, 2.0, 3.0, 0.5});
  std::uint64_t graphs = 0, checks = 0, failed = 0;
  std::vector<std::string> failure_lines;
  if (o.format == "csv") {
    out << "n,graphs,checks,failed\n";
  }
  for (int n = o.min_n; n <= o.max_n; ++n) {
    std::uint64_t g_n = 0, c_n = 0, f_n = 0;
    for (const auto& mv : verify_order(n, alphas, o.jobs)) {
      ++g_n;
      c_n += mv.verdict.checks;
      if (!mv.verdict.passed()) {
        ++f_n;
        if (failure_lines.size() < 50) {
          failure_lines.push_back("n=" + std::to_string(n) + " mask=" + std::to_string(mv.mask) +
                                  " " + mv.verdict.failures.front());
        }
      }
    }
    if (o.format == "csv") {
      out << n << ',' << g_n << ',' << c_n << ',' << f_n << '\n';
    } else {
      out << Json{{"n", n}, {"graphs", g_n}, {"checks", c_n}, {"failed", f_n}}.dump() << '\n';
    }
    graphs += g_n;
    checks += c_n;
    failed += f_n;
  }
  for (const auto& line : failure_lines) {
    out << "# " << line << '\n';
  }
  if (failed == 0) {
    out << "all " << graphs << " graphs passed (" << checks << " checks)\n";
    return kExitOk;
  }
  out << failed << " of " << graphs << " graphs failed\n";
  return kExitCheckFailed;
}

// -------------------------------------------------------- enumerate-check

int cmd_enumerate(const Options& o, std::ostream& out) {
  check_order_range(o);
  const auto alphas = exponents(o, {-1.0, 2.0, 3.0, 0.5});
  bool ok = true;
  if (o.format == "csv") {
    out << "n,mask,m,checks,status,failure\n";
  }
  for (int n = o.min_n; n <= o.max_n; ++n) {
    for (const auto& mv : verify_order(n, alphas, o.jobs)) {
      const bool passed = mv.verdict.passed();
      ok = ok && passed;
      const std::string failure = passed ? "" : mv.verdict.failures.front();
      const auto m = std::popcount(mv.mask);
      if (o.format == "csv") {
        out << n << ',' << mv.mask << ',' << m << ',' << mv.verdict.checks << ','
            << (passed ? "pass" : "fail") << ',' << csv_field(failure) << '\n';
      } else {
        Json j{{"n", n},
               {"mask", mv.mask},
               {"m", m},
               {"checks", mv.verdict.checks},
               {"status", passed ? "pass" : "fail"}};
        if (!passed) {
          j["failures"] = mv.verdict.failures;
        }
        out << j.dump() << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- regress

int cmd_regress(const Options& o, std::ostream& out) {
  if (o.dataset.empty()) {
    throw UsageError("--dataset is required");
  }
  std::vector<CompoundRecord> records;
  try {
    records = load_dataset(o.dataset);
  } catch (const std::exception& e) {
    throw UsageError(o.dataset + ": " + e.what());
  }
  const auto rows = reproduce_models(records);
  const auto refs = reference_models();
  const auto reference = [&](const ModelRow& row) -> const ReferenceModel* {
    for (const auto& r : refs) {
      if (r.descriptor == row.descriptor && r.property == row.property) {
        return &r;
      }
    }
    return nullptr;
  };

  if (o.format == "csv") {
    out << "descriptor,property,n_points,pearson_r,intercept,slope,intercept_stderr,"
           "slope_stderr,ref_compounds,ref_pearson_r,ref_intercept,ref_slope,gap\n";
  }
  for (const auto& row : rows) {
    const ReferenceModel* ref = reference(row);
    const auto& fit = row.result;
    if (o.format == "csv") {
      out << to_string(row.descriptor) << ',' << to_string(row.property) << ',' << row.n_points;
      if (fit) {
        out << ',' << format_double(fit->pearson_r) << ',' << format_double(fit->intercept) << ','
            << format_double(fit->slope) << ',' << format_double(fit->intercept_stderr) << ','
            << format_double(fit->slope_stderr);
      } else {
        out << ",,,,,";
      }
      out << ',' << ref->compounds << ',' << format_double(ref->pearson_r) << ','
          << format_double(ref->intercept) << ',' << format_double(ref->slope) << ','
          << csv_field(row.gap) << '\n';
    } else {
      Json j;
      j["descriptor"] = to_string(row.descriptor);
      j["property"] = to_string(row.property);
      j["n_points"] = row.n_points;
      if (fit) {
        j["pearson_r"] = fit->pearson_r;
        j["intercept"] = fit->intercept;
        j["slope"] = fit->slope;
        j["intercept_stderr"] = fit->intercept_stderr;
        j["slope_stderr"] = fit->slope_stderr;
      }
      j["reference"] = {{"compounds", ref->compounds},
                        {"pearson_r", ref->pearson_r},
                        {"intercept", ref->intercept},
                        {"slope", ref->slope}};
      if (!row.gap.empty()) {
        j["gap"] = row.gap;
      }
      out << j.dump() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zagreb-family topological indices, closed forms and bounds", "zagreb"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alphas, "Exponent (repeatable)")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->allow_extra_args(false);
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json-lines"}));
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Edge-list file");
    sub->add_option("--family", o.family, "Named family, e.g. cycle_pendants:4,2");
  };
  const auto add_orders = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "Largest order (default 6)");
    sub->add_option("--min-n", o.min_n, "Smallest order (default 1)");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* compute = app.add_subcommand("compute", "Indices of one graph or family");
  add_input(compute);
  add_alpha(compute);
  add_format(compute);
  compute->add_option("--write-edges", o.write_edges, "Also write the graph as an edge list");

  auto* bounds = app.add_subcommand("bounds", "Bound reports for one graph or family");
  add_input(bounds);
  add_alpha(bounds);
  add_format(bounds);
  bounds->add_option("--bound", o.bound, "Only this bound kind");

  auto* sharp = app.add_subcommand("sharpness", "Check that extremal families attain bounds");
  sharp->add_option("--family", o.family, "One family (default: the standard cases)");
  sharp->add_option("--graph", o.graph)->group("");
  sharp->add_flag("--extended", o.extended, "Wider parameter grids");
  add_alpha(sharp);
  add_format(sharp);

  auto* verify = app.add_subcommand("verify-identities", "Exhaustive identity suite");
  add_alpha(verify);
  add_format(verify);
  add_orders(verify);

  auto* enumerate = app.add_subcommand("enumerate-check", "Per-graph pass/fail stream");
  add_alpha(enumerate);
  add_format(enumerate);
  add_orders(enumerate);

  auto* regress = app.add_subcommand("regress", "Descriptor/property regressions");
  regress->add_option("--dataset", o.dataset, "Dataset CSV")->required();
  add_format(regress);

  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(o, out);
    }
    if (bounds->parsed()) {
      return cmd_bounds(o, out);
    }
    if (sharp->parsed()) {
      return cmd_sharpness(o, out);
    }
    if (verify->parsed()) {
      return cmd_verify(o, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(o, out);
    }
    return cmd_regress(o, out);
  } catch (const UsageError& e) {
    err << "zagreb: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace zagreb::cli
