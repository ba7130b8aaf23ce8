#include "zagreb/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace zagreb {

namespace {

// Exactly two integers on a comment-stripped line.
bool parse_fields(const std::string& body, std::int64_t (&out)[2]) {
  std::istringstream fields(body);
  std::string extra;
  if (!(fields >> out[0] >> out[1])) {
    return false;
  }
  return !(fields >> extra);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::int64_t fields[2];
    if (!parse_fields(line, fields)) {
      throw EdgeListError(line_no, have_header ? "expected 'u v'" : "expected header 'n m'");
    }
    if (!have_header) {
      n = fields[0];
      m = fields[1];
      if (n < 0 || m < 0) {
        throw EdgeListError(line_no, "negative vertex or edge count");
      }
      have_header = true;
      pairs.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<std::int64_t>(pairs.size()) == m) {
      throw EdgeListError(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    pairs.emplace_back(fields[0], fields[1]);
    try {
      // Validate eagerly so the error points at the offending line.
      Graph::from_edge_list(static_cast<std::size_t>(n), std::span(&pairs.back(), 1));
    } catch (const GraphError& e) {
      throw EdgeListError(line_no, e.what());
    }
  }
  if (!have_header) {
    throw EdgeListError(line_no, "missing header 'n m'");
  }
  if (static_cast<std::int64_t>(pairs.size()) != m) {
    throw EdgeListError(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                                     std::to_string(pairs.size()));
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open edge-list file " + path.string());
  }
  try {
    return read_edge_list(in);
  } catch (const EdgeListError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace zagreb
