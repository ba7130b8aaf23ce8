#pragma once

// Per-graph consistency suite: closed forms against direct evaluation,
// the coindex and leap identities, bound directions and the structural
// consequences of the remainder decomposition.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/number.hpp"

namespace zagreb {

struct GraphVerdict {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // "check_name alpha=...: detail"
  bool passed() const noexcept { return failures.empty(); }
};

/// Runs every check whose hypotheses hold for g at each alpha. Checks whose
/// hypotheses fail are skipped, not counted.
GraphVerdict verify_graph(const Graph& g, std::span<const ExponentParam> alphas);

struct MaskVerdict {
  std::uint64_t mask;
  GraphVerdict verdict;
};

/// verify_graph over every connected labelled graph on n vertices, in mask
/// order. `jobs` > 1 splits the mask range across threads; the result order
/// does not depend on it.
std::vector<MaskVerdict> verify_order(int n, std::span<const ExponentParam> alphas,
                                      unsigned jobs = 1);

}  // namespace zagreb
