#include "cliquebench/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace cliquebench {

VertexSet spectral_base_attack(const Graph& g, const SpectralConfig& cfg, EigenPair* second) {
  if (cfg.k < 1) throw InputError("spectral attack needs k >= 1");
  if (!(cfg.eig_tol > 0.0)) throw InputError("eig_tol must be positive");
  const std::size_t n = g.n();
  auto [v1, v2] = top_two_eigenpairs(g, cfg.eigen_options());

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  const std::size_t w_size = std::min(cfg.k, n);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(w_size), order.end(),
                    [&](Vertex a, Vertex b) {
                      const double x = std::abs(v2.vector[a]);
                      const double y = std::abs(v2.vector[b]);
                      return x != y ? x > y : a < b;
                    });
  order.resize(w_size);
  const Bitset w_mask = VertexSet::from_unsorted(order).to_bitset(n);

  const std::size_t threshold = (3 * cfg.k + 3) / 4;
  std::vector<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    if (w_mask.count_and(g.row(v)) >= threshold) q.push_back(v);
  }
  if (second != nullptr) *second = std::move(v2);
  return VertexSet::from_sorted(std::move(q));
}

std::size_t derive_subset_size(double c) {
  if (!(c > 0.0)) throw InputError("derive_subset_size needs c > 0");
  const double s = 2.0 * std::log2(10.0 / c) + 2.0;
  // the small slack keeps exact integers such as c = 5 from rounding up
  const double up = std::ceil(s - 1e-9);
  return up <= 0.0 ? 0 : static_cast<std::size_t>(up);
}

std::uint64_t for_each_clique_of_size(const Graph& g, std::size_t s, std::uint64_t budget,
                                      const Deadline& deadline,
                                      const std::function<bool(const VertexSet&)>& visit) {
  std::uint64_t visited = 0;
  if (s == 0) {
    if (budget > 0) {
      ++visited;
      visit(VertexSet{});
    }
    return visited;
  }
  const std::size_t n = g.n();
  std::vector<Vertex> stack;
  // candidates[d]: vertices after stack[d-1] adjacent to all of stack[0..d)
  std::vector<Bitset> candidates(s, Bitset(n));
  candidates[0] = Bitset(n, true);
  bool stop = false;

  auto descend = [&](auto&& self, std::size_t depth) -> void {
    Bitset& cand = candidates[depth];
    for (std::size_t v = cand.find_first(); v < n && !stop; v = cand.find_next(v + 1)) {
      stack.push_back(static_cast<Vertex>(v));
      if (stack.size() == s) {
        ++visited;
        if (visit(VertexSet::from_sorted(stack)) || visited >= budget ||
            ((visited & 0xff) == 0 && deadline.expired())) {
          stop = true;
        }
      } else {
        Bitset& next = candidates[depth + 1];
        next = cand;
        next.clear_through(v);
        next.and_words(g.row(static_cast<Vertex>(v)));
        if (next.count() + stack.size() >= s) self(self, depth + 1);
      }
      stack.pop_back();
    }
  };
  if (budget > 0) descend(descend, 0);
  return visited;
}

BoostedSpectralResult spectral_boosted_attack(const Graph& g, const SpectralConfig& cfg,
                                              std::uint64_t budget, const Deadline& deadline) {
  if (cfg.k < 1) throw InputError("spectral attack needs k >= 1");
  BoostedSpectralResult result;
  const std::size_t n = g.n();
  if (n < 2) throw InputError("spectral attack needs n >= 2");
  result.c = static_cast<double>(cfg.k) / std::sqrt(static_cast<double>(n));
  result.subset_size = std::min(derive_subset_size(result.c), cfg.k);

  auto accept = [&](const VertexSet& candidate) {
    return candidate.size() >= cfg.k && is_clique(g, candidate);
  };
  if (cfg.k <= n) {
    VertexSet q = spectral_base_attack(g, cfg);
    if (accept(q)) {
      result.clique = std::move(q);
      return result;
    }
  }
  if (!cfg.c_boost) return result;

  const std::size_t s = result.subset_size;
  const std::size_t k_rest = cfg.k - s;
  result.subsets_examined =
      for_each_clique_of_size(g, s, budget, deadline, [&](const VertexSet& seed) {
        if (k_rest == 0) {
          if (accept(seed)) result.clique = seed;
          return result.clique.has_value();
        }
        const VertexSet pool = common_neighbors(g, seed);
        if (pool.size() < std::max<std::size_t>(k_rest, 2)) return false;
        const InducedSubgraph sub = induced_subgraph(g, pool);
        SpectralConfig inner = cfg;
        inner.k = k_rest;
        const VertexSet q = sub.map_to_original(spectral_base_attack(sub.graph, inner));
        VertexSet candidate = q.united(seed);
        if (accept(candidate)) {
          result.clique = std::move(candidate);
          return true;
        }
        return false;
      });
  if (!result.clique) {
    result.budget_exceeded = result.subsets_examined >= budget || deadline.expired();
  }
  return result;
}

}  // namespace cliquebench
