#pragma once

// Sharpness verification: build the graphs claimed to attain each bound and
// compare the direct index with the bound value.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/bounds.hpp"
#include "zagreb/families.hpp"

namespace zagreb {

enum class BoundShape { secant, unit_step, remainder };

std::string_view to_string(BoundShape shape);

/// The concrete bound kind for a shape at a given exponent.
BoundKind kind_for(BoundShape shape, const ExponentParam& alpha);

struct SharpnessCase {
  std::vector<NamedFamily> instances;
  Domain domain;
  BoundShape shape;
  std::vector<ExponentParam> alphas;
};

enum class SharpnessStatus { attained, not_attained, configuration_error };

std::string_view to_string(SharpnessStatus status);

struct SharpnessRow {
  NamedFamily family;
  Domain domain;
  BoundKind kind;
  ExponentParam alpha;
  std::optional<Value> direct;
  std::optional<Value> bound;
  std::optional<Value> gap;
  SharpnessStatus status;
  std::string detail;  // inapplicability reason for configuration errors
};

/// One row per (instance, alpha), in instance-major order.
std::vector<SharpnessRow> verify_sharpness(const SharpnessCase& c);

/// Bound shape each drawn figure and parameterised family is known to
/// attain; nullopt for families without one (paths, cycles, ...).
std::optional<SharpnessCase> natural_case(const NamedFamily& family,
                                          std::vector<ExponentParam> alphas);

/// The six figures plus cycle_pendants(p, r) for 3 <= p <= 6, 1 <= r <= 4
/// and star_pendants(p, a) for 5 <= p <= 8; `extended` widens the grids
/// to p <= 10, r <= 6 and p <= 12.
std::vector<SharpnessCase> standard_sharpness_cases(const std::vector<ExponentParam>& alphas,
                                                    bool extended = false);

/// Rows sorted by (family label, domain, kind, alpha) for stable output.
void sort_rows(std::vector<SharpnessRow>& rows);

/// CSV header "family,params,alpha,direct,bound,gap,attained" plus one line
/// per row. `params` joins the family parameters with ';'. Configuration
/// errors leave direct/bound/gap empty and print "error" in `attained`.
/// The json-lines form also carries the domain, bound kind and status.
void write_sharpness_csv(std::ostream& out, const std::vector<SharpnessRow>& rows);
void write_sharpness_json_lines(std::ostream& out, const std::vector<SharpnessRow>& rows);

/// Every connected graph on n vertices (n <= 7) whose direct index equals
/// the bound exactly (or within tolerance in real mode).
std::vector<Graph> scan_for_sharp_instances(int n, Domain domain, BoundKind kind,
                                            const ExponentParam& alpha);

}  // namespace zagreb
