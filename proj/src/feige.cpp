#include "cliquebench/feige.hpp"

#include <algorithm>
#include <cmath>

#include "cliquebench/oracle.hpp"

namespace cliquebench {

void FeigeConfig::validate() const {
  if (t < 1) throw InputError("feige t must be >= 1");
  if (density_ratio < 1) throw InputError("feige density_ratio must be >= 1");
}

std::size_t feige_asymptotic_t(std::size_t n) {
  if (n < 16) return 1;
  const double ln = std::log(static_cast<double>(n));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ln / std::log(ln))));
}

double feige_size_bound(std::size_t n, const FeigeConfig& cfg) {
  const double t = static_cast<double>(cfg.t);
  const double base = 3.0 * static_cast<double>(cfg.density_ratio);
  return t * std::log(static_cast<double>(n) / t) / std::log(base) - 3.0;
}

bool is_poor_certificate(const Graph& g_sub, std::size_t density_ratio) {
  return clique_number(g_sub) * 2 * density_ratio < g_sub.n();
}

FeigeStep feige_iteration(const Graph& g, const FeigeState& current, const FeigeConfig& cfg) {
  cfg.validate();
  FeigeStep step;
  step.state = current;
  const std::size_t size = current.vertices.count();
  if (size < cfg.min_vertices()) return step;

  std::vector<Vertex> members;
  members.reserve(size);
  current.vertices.for_each([&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });

  const std::size_t t = cfg.t;
  const std::size_t need = size;  // 2 density_ratio (|N| + t) >= |V''|
  std::vector<std::size_t> idx(t);
  std::vector<Bitset> masks(t + 1);  // masks[d]: V'' adjacent to the first d picks
  std::vector<char> ok(t + 1, 1);     // ok[d]: the first d picks form a clique

  for (std::size_t start = 0; start < members.size(); start += cfg.part_size()) {
    const std::size_t stop = std::min(members.size(), start + cfg.part_size());
    const std::size_t len = stop - start;
    std::uint64_t examined = 0;
    if (len >= t) {
      for (std::size_t d = 0; d < t; ++d) idx[d] = d;
      masks[0] = current.vertices;
      std::size_t valid = 0;  // masks[0..valid] are current for idx
      while (true) {
        ++examined;
        for (std::size_t d = valid; d < t; ++d) {
          const Vertex v = members[start + idx[d]];
          // pick d is adjacent to all earlier picks iff it survives their mask
          ok[d + 1] = ok[d] && masks[d].test(v);
          masks[d + 1] = masks[d];
          masks[d + 1].and_words(g.row(v));
        }
        const bool clique = ok[t] != 0;
        if (clique) {
          const std::size_t nbrs = masks[t].count();
          if (2 * cfg.density_ratio * (nbrs + t) >= need) {
            std::vector<Vertex> picked(t);
            for (std::size_t d = 0; d < t; ++d) picked[d] = members[start + idx[d]];
            step.outcome = FeigeOutcome::extended;
            step.state.vertices = masks[t];
            step.state.clique = current.clique.united(VertexSet::from_unsorted(std::move(picked)));
            step.subsets_examined += examined;
            step.max_part_examined = std::max(step.max_part_examined, examined);
            return step;
          }
        }
        // next combination of t indices from [0, len)
        std::size_t d = t;
        while (d > 0 && idx[d - 1] == len - t + (d - 1)) --d;
        if (d == 0) break;
        ++idx[d - 1];
        for (std::size_t e = d; e < t; ++e) idx[e] = idx[e - 1] + 1;
        valid = d - 1;
      }
    }
    step.subsets_examined += examined;
    step.max_part_examined = std::max(step.max_part_examined, examined);
  }
  step.outcome = FeigeOutcome::poor;
  return step;
}

FeigeResult feige_attack(const Graph& g, const FeigeConfig& cfg, const Deadline& deadline) {
  cfg.validate();
  FeigeResult result;
  Bitset alive(g.n(), true);
  while (true) {
    ++result.phases;
    FeigeState state{alive, {}};
    bool removed = false;
    while (!removed) {
      if (deadline.expired()) {
        result.budget_exceeded = true;
        result.clique = state.clique;
        return result;
      }
      FeigeStep step = feige_iteration(g, state, cfg);
      ++result.iterations;
      result.subsets_examined += step.subsets_examined;
      result.max_part_examined = std::max(result.max_part_examined, step.max_part_examined);
      switch (step.outcome) {
        case FeigeOutcome::done:
          result.clique = std::move(state.clique);
          return result;
        case FeigeOutcome::extended:
          state = std::move(step.state);
          break;
        case FeigeOutcome::poor:
          result.poor_sets.push_back(VertexSet::from_bitset(step.state.vertices));
          alive.subtract(step.state.vertices);
          removed = true;
          break;
      }
    }
  }
}

}  // namespace cliquebench
