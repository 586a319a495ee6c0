#include "cliquebench/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace cliquebench {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw FormatError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

Graph read_dimacs(std::istream& in, std::size_t first_line) {
  std::optional<GraphBuilder> builder;
  std::string raw;
  std::size_t line = first_line - 1;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (builder) throw FormatError("duplicate problem line", line);
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw FormatError("expected 'p edge <n> <m>'", line);
      }
      const std::uint64_t n = parse_count(tokens[2], line);
      if (n > (std::uint64_t{1} << 31)) throw FormatError("vertex count too large", line);
      builder.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (tokens[0] == "e") {
      if (!builder) throw FormatError("edge line before problem line", line);
      if (tokens.size() != 3) throw FormatError("expected 'e <u> <v>'", line);
      const std::uint64_t u = parse_count(tokens[1], line);
      const std::uint64_t v = parse_count(tokens[2], line);
      if (u == 0 || v == 0 || u > builder->n() || v > builder->n()) {
        throw FormatError("edge endpoint out of range (endpoints are 1-based)", line);
      }
      if (u == v) throw FormatError("self-loop", line);
      builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw FormatError("unrecognized line type '" + std::string(tokens[0]) + "'", line);
  }
  if (!builder) throw FormatError("missing problem line", line);
  return std::move(*builder).build();
}

void write_dimacs(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << "p edge " << g.n() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_dimacs(out, g);
}

}  // namespace cliquebench
