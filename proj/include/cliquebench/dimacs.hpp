#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cliquebench/graph.hpp"

namespace cliquebench {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// DIMACS ascii: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` lines
// with 1-based endpoints. Repeated edges (either orientation) collapse.

/// `first_line` offsets reported line numbers when the block is embedded in
/// a larger file.
Graph read_dimacs(std::istream& in, std::size_t first_line = 1);
void write_dimacs(std::ostream& out, const Graph& g);

Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

}  // namespace cliquebench
