#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>

#include "zagreb/edge_list.hpp"
#include "zagreb/profile.hpp"
#include "zagreb/regression.hpp"

namespace zagreb {

namespace {

constexpr std::string_view kHeader = "name,graph,boiling_point,entropy";

// Splits one CSV line. Double quotes delimit fields; "" inside quotes is a
// literal quote.
std::vector<std::string> split_csv(std::string_view line, std::size_t row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw DatasetError(row, "unterminated quoted field");
  }
  return fields;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::optional<double> parse_property(const std::string& cell, std::string_view column,
                                     std::size_t row) {
  if (cell.empty()) {
    return std::nullopt;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cell.size() || !std::isfinite(v)) {
    throw DatasetError(row, "non-numeric " + std::string(column) + " '" + cell + "'");
  }
  return v;
}

std::int64_t leap_zagreb_of(const Graph& g) {
  std::int64_t total = 0;
  for (std::int64_t d2 : two_distance_degrees(g)) {
    total += d2 * d2;
  }
  return total;
}

}  // namespace

Graph parse_inline_graph(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("inline graph needs 'n;u-v,...'");
  }
  const std::int64_t n = parse_int(text.substr(0, semi), "vertex count");
  if (n < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("edge '" + std::string(item) + "' is not u-v");
    }
    pairs.emplace_back(parse_int(item.substr(0, dash), "vertex"),
                       parse_int(item.substr(dash + 1), "vertex"));
    if (comma == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

std::vector<CompoundRecord> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset " + path.string());
  }
  const std::filesystem::path base = path.parent_path();

  std::vector<CompoundRecord> records;
  bool header_seen = false;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    // Provenance comments and blank lines.
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) {
        throw DatasetError(row, "expected header '" + std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    const auto fields = split_csv(line, row);
    if (fields.size() != 4) {
      throw DatasetError(row, "expected 4 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      throw DatasetError(row, "empty name");
    }
    CompoundRecord rec{fields[0], {}, std::nullopt, std::nullopt, 0, 0, row};
    const std::string& source = fields[1];
    try {
      if (!source.empty() && source.front() == '@') {
        rec.graph = read_edge_list_file(base / source.substr(1));
      } else {
        rec.graph = parse_inline_graph(source);
      }
    } catch (const std::exception& e) {
      throw DatasetError(row, std::string("graph: ") + e.what());
    }
    if (rec.graph.vertex_count() == 0 || !rec.graph.is_connected()) {
      throw DatasetError(row, "graph of '" + rec.name + "' is not connected");
    }
    rec.boiling_point = parse_property(fields[2], "boiling_point", row);
    rec.entropy = parse_property(fields[3], "entropy", row);
    rec.first_zagreb = first_zagreb(rec.graph);
    rec.leap_zagreb = leap_zagreb_of(rec.graph);
    records.push_back(std::move(rec));
  }
  if (!header_seen) {
    throw DatasetError(row, "missing header");
  }
  return records;
}

}  // namespace zagreb
