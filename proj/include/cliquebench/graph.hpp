#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliquebench/bitset.hpp"

namespace cliquebench {

using Vertex = std::uint32_t;

/// Thrown for malformed arguments: out-of-range vertices, bad probabilities,
/// parameter combinations outside an operation's contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly ascending, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);

  /// Sorts and deduplicates.
  static VertexSet from_unsorted(std::vector<Vertex> members);
  /// Requires strictly ascending input; throws InputError otherwise.
  static VertexSet from_sorted(std::vector<Vertex> members);
  static VertexSet from_bitset(const Bitset& bits);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  /// Largest member + 1, or 0 for the empty set.
  std::size_t bound() const { return members_.empty() ? 0 : std::size_t{members_.back()} + 1; }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;
  VertexSet united(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  Bitset to_bitset(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  explicit VertexSet(std::vector<Vertex> sorted) : members_(std::move(sorted)) {}
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

class GraphBuilder;

/// Immutable undirected simple graph stored as packed adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);  // edgeless

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t n() const { return n_; }
  std::size_t words_per_row() const { return stride_; }
  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const Word> row(Vertex v) const { return {bits_.data() + v * stride_, stride_}; }
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, ascending

  /// Full scan of the symmetry / no-self-loop invariants.
  bool check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area; build() hands the rows to an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& start);

  std::size_t n() const { return graph_.n_; }
  void add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  Graph graph_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new index -> original index

  VertexSet map_to_original(const VertexSet& local) const;
};

void check_vertex(const Graph& g, Vertex v);
void check_vertices(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
VertexSet common_neighbors(const Graph& g, const VertexSet& s);
Bitset common_neighbors_mask(const Graph& g, const VertexSet& s);
std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& within);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace cliquebench
