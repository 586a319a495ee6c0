#pragma once

#include <cstddef>
#include <cstdint>

#include "cliquebench/budget.hpp"
#include "cliquebench/graph.hpp"
#include "cliquebench/rng.hpp"

namespace cliquebench {

struct GreedyConfig {
  std::size_t restarts = 1;  // best of this many independent runs
};

struct GreedyResult {
  VertexSet clique;
  std::uint64_t iterations = 0;  // vertices added, summed over restarts
};

/// Randomized greedy clique search: start at a uniform vertex, then keep
/// adding a uniform vertex of the common neighborhood until it is empty.
/// The result is a maximal clique. Restart r draws from rng.child("restart/r").
GreedyResult greedy_attack(const Graph& g, const GreedyConfig& cfg, const Rng& rng,
                           const Deadline& deadline = {});

}  // namespace cliquebench
