#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "zagreb/graph.hpp"

namespace zagreb {

class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text format:
///
///   n m
///   u v        (m lines, 0-based, whitespace separated)
///
/// Everything after '#' on a line is a comment; blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Writes "n m" followed by one "u v" line per edge (u < v, sorted), LF endings.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_text(const Graph& g);

}  // namespace zagreb
