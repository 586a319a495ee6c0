#pragma once

#include <cstddef>
#include <cstdint>

#include "cliquebench/budget.hpp"
#include "cliquebench/graph.hpp"
#include "cliquebench/rng.hpp"

namespace cliquebench {

struct MetropolisConfig {
  double temperature = 2.0;    // >= 1; removals are accepted with probability 1/temperature
  std::uint64_t max_steps = 0;  // 0 selects default_metropolis_steps(n)
  std::size_t target_size = 0;  // stop once a clique this large is visited; 0 disables
  VertexSet initial_state;      // must be a clique of the graph
};

/// ceil(n^2 ln n), at least n.
std::uint64_t default_metropolis_steps(std::size_t n);

/// One move of the Metropolis process on cliques: pick v uniformly from all
/// n vertices; add it if it is outside the state and adjacent to all of it,
/// remove it with probability 1/temperature if it is inside, else stay.
VertexSet metropolis_step(const Graph& g, const VertexSet& state, const MetropolisConfig& cfg,
                          Rng& rng);

struct MetropolisResult {
  VertexSet best;     // largest state visited
  VertexSet final_state;
  std::uint64_t steps = 0;
  bool reached_target = false;
};

MetropolisResult metropolis_attack(const Graph& g, const MetropolisConfig& cfg, Rng& rng,
                                   const Deadline& deadline = {});

/// Transition probability p(from, to) of the process. Both sets must be
/// cliques. Generic in the scalar so it can be evaluated exactly over
/// rationals as well as in floating point.
template <class Scalar>
Scalar transition_probability(const Graph& g, const VertexSet& from, const VertexSet& to,
                              const Scalar& temperature) {
  const Scalar n(static_cast<long long>(g.n()));
  const Scalar one(1);
  auto add_prob = one / n;
  auto remove_prob = one / (temperature * n);
  if (from == to) {
    Scalar leave(0);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (from.contains(v)) {
        leave += remove_prob;
      } else {
        bool adjacent_to_all = true;
        for (Vertex u : from) adjacent_to_all = adjacent_to_all && g.has_edge(u, v);
        if (adjacent_to_all) leave += add_prob;
      }
    }
    return one - leave;
  }
  if (to.size() == from.size() + 1 && from.is_subset_of(to)) return add_prob;
  if (from.size() == to.size() + 1 && to.is_subset_of(from)) return remove_prob;
  return Scalar(0);
}

}  // namespace cliquebench
