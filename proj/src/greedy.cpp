#include "cliquebench/greedy.hpp"

#include <string>
#include <vector>

namespace cliquebench {

GreedyResult greedy_attack(const Graph& g, const GreedyConfig& cfg, const Rng& rng,
                           const Deadline& deadline) {
  if (g.n() == 0) throw InputError("greedy search needs at least one vertex");
  if (cfg.restarts < 1) throw InputError("greedy restarts must be >= 1");

  GreedyResult result;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    if (r > 0 && deadline.expired()) break;
    Rng stream = rng.child("restart/" + std::to_string(r));
    std::vector<Vertex> clique;
    // candidates = vertices outside the clique adjacent to all of it
    Bitset candidates(g.n(), true);
    std::size_t remaining = g.n();
    while (remaining > 0) {
      const std::size_t pick = candidates.select(stream.next_below(remaining));
      const auto v = static_cast<Vertex>(pick);
      clique.push_back(v);
      candidates.and_words(g.row(v));
      remaining = candidates.count();
      ++result.iterations;
    }
    if (clique.size() > result.clique.size()) {
      result.clique = VertexSet::from_unsorted(std::move(clique));
    }
  }
  return result;
}

}  // namespace cliquebench
