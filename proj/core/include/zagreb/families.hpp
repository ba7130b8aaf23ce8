#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/profile.hpp"

namespace zagreb {

enum class FamilyTag {
  figure1,
  figure2,
  figure3,
  figure4,
  figure5,
  figure6,
  cycle_pendants,
  star_pendants,
  path,
  cycle,
  star,
  complete,
  tetracene_profile,
};

/// A named graph or graph family with its integer parameters.
///
/// Parameter domains:
///   cycle_pendants(p, r)   p >= 3, r >= 1
///   star_pendants(p, a)    p > 4, 1 < a < p - 2
///   path(n), complete(n)   n >= 1
///   cycle(n)               n >= 3
///   star(n)                n >= 2   (n vertices: one centre, n - 1 leaves)
///   tetracene_profile(n)   n >= 1
struct NamedFamily {
  FamilyTag tag;
  std::vector<int> params;

  /// Accepts "figure3", "path:5", "cycle_pendants:4,2" or "cycle_pendants(4,2)".
  static NamedFamily parse(std::string_view text);

  std::string name() const;
  /// Parameters joined by ';' (empty for the fixed figures).
  std::string params_text() const;
  /// name + parameters, e.g. "star_pendants(6,3)".
  std::string label() const;

  friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
};

/// Throws std::invalid_argument when the parameters are outside the domain.
void validate(const NamedFamily& family);

/// Graph for every tag except tetracene_profile, which only has a degree
/// profile (its counts are known, not its wiring).
std::variant<Graph, DegreeProfile> build_named(const NamedFamily& family);

/// build_named for graph-valued families; throws for tetracene_profile.
Graph build_graph(const NamedFamily& family);

/// Degree profile of linear [n] tetracene: 18n vertices, 23n - 2 edges,
/// 8n + 4 vertices of degree 2 and 10n - 4 of degree 3.
DegreeProfile tetracene_profile(int n);

/// Graph on p(r+1) - 1 vertices: a p-cycle whose first vertex carries r - 1
/// pendant vertices and every other cycle vertex r pendants.
Graph cycle_with_pendants(int p, int r);

/// Star on p vertices (centre 0) with one pendant vertex hung on each of the
/// first a leaves; p + a vertices in total.
Graph star_with_pendants(int p, int a);

}  // namespace zagreb
