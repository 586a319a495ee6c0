#pragma once

#include <cstddef>
#include <vector>

#include "cliquebench/budget.hpp"
#include "cliquebench/graph.hpp"
#include "cliquebench/rng.hpp"

namespace cliquebench {

struct DekelConfig {
  double alpha = 0.5;  // sampling probability of S_i, in (0,1)
  double beta = 1.3;   // threshold offset in standard deviations, > 0
  double p = 0.5;      // edge probability of the instance
  std::size_t k = 0;   // planted size hint
  std::size_t t_max = 0;          // 0 means ceil(ln n)
  std::size_t min_survivors = 16;

  void validate() const;
};

/// Complementary standard normal CDF.
double normal_sf(double x);

/// Expected per-iteration survival rate of clique vertices:
/// (1 - alpha) * sf(beta - c sqrt(alpha) (1 - p) / sqrt(p (1 - p))).
double dekel_rho(double alpha, double beta, double c, double p);

/// Estimate of the clique vertices left after t iterations: k rho^t.
double estimate_surviving_clique(std::size_t k, double rho, std::size_t t);

struct DekelIteration {
  std::size_t vertices = 0;   // |V(G_i)| before the iteration
  std::size_t sampled = 0;    // |S_i|
  std::size_t survivors = 0;  // |V(G_{i+1})|
  double estimated_clique = 0.0;  // k rho^{i+1}
  bool noop = false;          // S_i was empty
};

struct DekelTrace {
  std::vector<DekelIteration> iterations;
  double rho = 0.0;
};

/// One phase-1 step: sample S_i with probability alpha per vertex, then keep
/// the vertices outside S_i with at least p|S_i| + beta sqrt(p(1-p)|S_i|)
/// neighbors in S_i. The mapping is into g's indices. An empty S_i leaves
/// the graph unchanged.
InducedSubgraph dekel_phase1_iterate(const Graph& g, const DekelConfig& cfg, Rng& rng,
                                     DekelIteration* record = nullptr);

/// Vertices of g_t (local indices) with degree at least
/// p|V(g_t)| + (1-p)/2 * k rho^t, with t = trace.iterations.size().
VertexSet dekel_phase2_extract(const Graph& g_t, const DekelTrace& trace, const DekelConfig& cfg);

struct DekelCompletion {
  VertexSet clique;
  bool undersized = false;
};

/// K' = k_bar plus every vertex with at least (1+p)/2 |k_bar| neighbors in
/// k_bar; the result is the (at most) k vertices with the most neighbors in
/// K' among those with at least (1+p)/2 k, ties toward the smaller index.
/// Throws InputError when k_bar is empty.
DekelCompletion dekel_phase3_complete(const Graph& g, const VertexSet& k_bar,
                                      const DekelConfig& cfg);

struct DekelResult {
  VertexSet clique;  // K*, possibly undersized or invalid
  bool success = false;
  bool undersized = false;
  DekelTrace trace;
  VertexSet k_bar;   // phase-2 output in g's indices
};

DekelResult dekel_attack(const Graph& g, const DekelConfig& cfg, Rng& rng,
                         const Deadline& deadline = {});

}  // namespace cliquebench
