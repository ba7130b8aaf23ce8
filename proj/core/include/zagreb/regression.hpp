#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Ordinary least-squares line y = intercept + slope * x.
struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double pearson_r = 0.0;
  std::size_t n_points = 0;
  // Standard errors from the usual OLS formulas (residual variance over n-2).
  double slope_stderr = 0.0;
  double intercept_stderr = 0.0;
  double residual_stderr = 0.0;
};

/// Single-pass fit using running co-moments. Throws std::invalid_argument
/// for mismatched lengths, fewer than 3 points, non-finite values or
/// constant xs.
RegressionResult fit(std::span<const double> xs, std::span<const double> ys);

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

struct CompoundRecord {
  std::string name;
  Graph graph;
  std::optional<double> boiling_point;
  std::optional<double> entropy;
  // Always recomputed from the graph.
  std::int64_t first_zagreb = 0;
  std::int64_t leap_zagreb = 0;
  std::size_t row = 0;  // 1-based line number in the file, header is line 1
};

/// Reads the dataset CSV (header `name,graph,boiling_point,entropy`).
///
/// `graph` is either `@relative/path.edges` (resolved against the dataset's
/// directory) or an inline `n;u-v,u-v,...` encoding. Empty property cells
/// mean "not measured". Fields may be double-quoted. Throws DatasetError
/// with the row number for malformed rows, unparsable numbers or
/// disconnected skeletons.
std::vector<CompoundRecord> load_dataset(const std::filesystem::path& path);

/// Parses the inline `n;u-v,u-v,...` graph encoding.
Graph parse_inline_graph(std::string_view text);

enum class Descriptor { first_zagreb, leap_zagreb };
enum class Property { entropy, boiling_point };

std::string_view to_string(Descriptor d);
std::string_view to_string(Property p);

struct ModelRow {
  Descriptor descriptor;
  Property property;
  std::size_t n_points = 0;
  std::optional<RegressionResult> result;  // empty when the property is missing
  std::string gap;                         // why result is empty
};

/// Fits each descriptor against each property over the records that carry
/// the property. Row order: (M1, S), (LM1, S), (M1, BP), (LM1, BP).
std::vector<ModelRow> reproduce_models(std::span<const CompoundRecord> records);

/// Published summary statistics for the benzenoid QSPR models.
struct ReferenceModel {
  Descriptor descriptor;
  Property property;
  std::size_t compounds;
  double pearson_r;
  double intercept;
  double slope;
};

std::span<const ReferenceModel> reference_models();

}  // namespace zagreb
