#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliquebench/budget.hpp"
#include "cliquebench/graph.hpp"

namespace cliquebench {

struct FeigeConfig {
  std::size_t t = 2;              // subset size
  std::size_t density_ratio = 1;  // the caller promises a clique of size >= n / density_ratio

  std::size_t part_size() const { return 2 * density_ratio * t; }
  std::size_t min_vertices() const { return 6 * density_ratio * t; }
  void validate() const;
};

/// ceil(ln n / ln ln n), at least 1.
std::size_t feige_asymptotic_t(std::size_t n);

/// t log_{3 density_ratio}(n / t) - 3, the size the returned clique is
/// guaranteed to reach.
double feige_size_bound(std::size_t n, const FeigeConfig& cfg);

/// True iff g_sub has no clique of size |V(g_sub)| / (2 density_ratio).
/// Exact, so only for small graphs.
bool is_poor_certificate(const Graph& g_sub, std::size_t density_ratio);

struct FeigeState {
  Bitset vertices;   // V'' as a mask over the full graph
  VertexSet clique;  // C, adjacent to every vertex of V''
};

enum class FeigeOutcome { extended, poor, done };

struct FeigeStep {
  FeigeOutcome outcome = FeigeOutcome::done;
  FeigeState state;  // extended: the new (V'', C); poor: V'' is the poor set; done: unchanged
  std::uint64_t subsets_examined = 0;
  std::uint64_t max_part_examined = 0;
};

/// One iteration: done if |V''| < 6 density_ratio t. Otherwise V'' is cut,
/// in index order, into parts of 2 density_ratio t vertices (the last may
/// be short) and every t-subset S of each part is tried in lexicographic
/// order. The first S that is a clique with |N(S)| >= |V''| / (2
/// density_ratio) - t extends C by S and moves to N(S). If no part has such
/// an S, V'' is reported poor.
FeigeStep feige_iteration(const Graph& g, const FeigeState& current, const FeigeConfig& cfg);

struct FeigeResult {
  VertexSet clique;
  std::vector<VertexSet> poor_sets;  // every certified poor set, in removal order
  std::size_t phases = 0;
  std::size_t iterations = 0;
  std::uint64_t subsets_examined = 0;
  std::uint64_t max_part_examined = 0;  // never above binomial(2 density_ratio t, t)
  bool budget_exceeded = false;
};

/// Phases of iterations on a shrinking G': each poor set found is removed
/// and a new phase starts from the rest with an empty C; the C of the first
/// phase that ends in done is returned.
FeigeResult feige_attack(const Graph& g, const FeigeConfig& cfg, const Deadline& deadline = {});

}  // namespace cliquebench
