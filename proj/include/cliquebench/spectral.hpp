#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "cliquebench/budget.hpp"
#include "cliquebench/eigensolver.hpp"
#include "cliquebench/graph.hpp"

namespace cliquebench {

struct SpectralConfig {
  std::size_t k = 0;
  bool c_boost = true;           // enumerate seed subsets when k < 10 sqrt(n)
  double eig_tol = 1e-8;
  std::size_t eig_max_iters = 0;  // 0 means 10n + 1000

  EigenOptions eigen_options() const { return {eig_tol, eig_max_iters}; }
};

/// Second-eigenvector recovery. W is the k vertices with the largest |v2|
/// entries (ties toward the smaller index); the result is every vertex with
/// at least ceil(3k/4) neighbors in W. Requires k >= 1 and n >= 2.
/// `second`, when given, receives the eigenpair used.
VertexSet spectral_base_attack(const Graph& g, const SpectralConfig& cfg,
                               EigenPair* second = nullptr);

/// ceil(2 log2(10 / c) + 2), clamped at 0. Throws InputError when c <= 0.
std::size_t derive_subset_size(double c);

struct BoostedSpectralResult {
  std::optional<VertexSet> clique;
  std::uint64_t subsets_examined = 0;
  std::size_t subset_size = 0;  // s
  double c = 0.0;                // k / sqrt(n)
  bool budget_exceeded = false;
};

/// Calls `visit` on every s-clique of g in lexicographic order until it
/// returns true. Returns the number of cliques visited; stops early once
/// `budget` cliques have been visited or the deadline passes.
std::uint64_t for_each_clique_of_size(const Graph& g, std::size_t s, std::uint64_t budget,
                                      const Deadline& deadline,
                                      const std::function<bool(const VertexSet&)>& visit);

/// The base attack on the whole graph first; if that is not a k-clique and
/// c_boost is set, for each s-clique S run the base attack with target
/// k - s on the subgraph induced by the common neighborhood of S, and accept
/// Q_S united with S once it is a clique of at least k vertices. `budget`
/// caps the number of subsets S examined.
BoostedSpectralResult spectral_boosted_attack(const Graph& g, const SpectralConfig& cfg,
                                              std::uint64_t budget,
                                              const Deadline& deadline = {});

}  // namespace cliquebench
