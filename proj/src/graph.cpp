#include "cliquebench/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cliquebench {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(from_unsorted(std::vector<Vertex>(members))) {}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VertexSet(std::move(members));
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members) {
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i - 1] >= members[i]) {
      throw InputError("vertex set must be strictly ascending");
    }
  }
  return VertexSet(std::move(members));
}

VertexSet VertexSet::from_bitset(const Bitset& bits) {
  std::vector<Vertex> out;
  out.reserve(bits.count());
  bits.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return VertexSet(std::move(out));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::with(Vertex v) const {
  std::vector<Vertex> out = members_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
  return VertexSet(std::move(out));
}

VertexSet VertexSet::without(Vertex v) const {
  std::vector<Vertex> out = members_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) out.erase(it);
  return VertexSet(std::move(out));
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

Bitset VertexSet::to_bitset(std::size_t n) const {
  Bitset bits(n);
  for (Vertex v : members_) bits.set(v);
  return bits;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

Graph::Graph(std::size_t n) : n_(n), stride_(words_for(n)), bits_(n * stride_, 0) {}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    Bitset r = Bitset::from_words(n_, row(u));
    r.clear_through(u);
    r.for_each([&](std::size_t v) { out.emplace_back(u, static_cast<Vertex>(v)); });
  }
  return out;
}

bool Graph::check_invariants() const {
  if (bits_.size() != n_ * stride_) return false;
  for (Vertex u = 0; u < n_; ++u) {
    if (has_edge(u, u)) return false;
    // padding bits past n must stay clear
    if (n_ % kWordBits != 0 && stride_ > 0) {
      const Word tail = bits_[u * stride_ + stride_ - 1] >> (n_ % kWordBits);
      if (tail != 0) return false;
    }
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v) != has_edge(v, u)) return false;
    }
  }
  return true;
}

GraphBuilder::GraphBuilder(std::size_t n) : graph_(n) {}

GraphBuilder::GraphBuilder(const Graph& start) : graph_(start) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= graph_.n_ || v >= graph_.n_) {
    throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& bits = graph_.bits_;
  const std::size_t stride = graph_.stride_;
  bits[u * stride + v / kWordBits] |= Word{1} << (v % kWordBits);
  bits[v * stride + u / kWordBits] |= Word{1} << (u % kWordBits);
}

Graph GraphBuilder::build() && { return std::move(graph_); }

VertexSet InducedSubgraph::map_to_original(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_original.at(v));
  return VertexSet::from_unsorted(std::move(out));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.n()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph with " +
                     std::to_string(g.n()) + " vertices");
  }
}

void check_vertices(const Graph& g, const VertexSet& s) {
  if (s.bound() > g.n()) check_vertex(g, s.members().back());
}

bool is_clique(const Graph& g, const VertexSet& s) {
  check_vertices(g, s);
  if (s.size() < 2) return true;
  const Bitset mask = s.to_bitset(g.n());
  for (Vertex u : s) {
    if (mask.count_and(g.row(u)) != s.size() - 1) return false;
  }
  return true;
}

Bitset common_neighbors_mask(const Graph& g, const VertexSet& s) {
  check_vertices(g, s);
  Bitset out(g.n(), true);
  for (Vertex u : s) {
    out.and_words(g.row(u));
    out.reset(u);
  }
  return out;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  return VertexSet::from_bitset(common_neighbors_mask(g, s));
}

std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& within) {
  check_vertex(g, v);
  check_vertices(g, within);
  std::size_t d = 0;
  for (Vertex u : within) d += g.has_edge(v, u) ? 1 : 0;
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_vertices(g, s);
  InducedSubgraph out{Graph(s.size()), {s.begin(), s.end()}};
  GraphBuilder b(s.size());
  for (Vertex i = 0; i < s.size(); ++i) {
    for (Vertex j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) b.add_edge(i, j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace cliquebench
