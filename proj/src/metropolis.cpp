#include "cliquebench/metropolis.hpp"

#include <cmath>

namespace cliquebench {
namespace {

void check_config(const Graph& g, const MetropolisConfig& cfg) {
  if (!(cfg.temperature >= 1.0)) throw InputError("metropolis temperature must be >= 1");
  if (!is_clique(g, cfg.initial_state)) throw InputError("initial state is not a clique");
}

}  // namespace

std::uint64_t default_metropolis_steps(std::size_t n) {
  const auto nn = static_cast<double>(n);
  const double steps = n < 2 ? 0.0 : std::ceil(nn * nn * std::log(nn));
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(steps), n);
}

VertexSet metropolis_step(const Graph& g, const VertexSet& state, const MetropolisConfig& cfg,
                          Rng& rng) {
  if (g.n() == 0) throw InputError("metropolis step on an empty graph");
  if (!(cfg.temperature >= 1.0)) throw InputError("metropolis temperature must be >= 1");
  if (!is_clique(g, state)) throw InputError("metropolis state is not a clique");
  const auto v = static_cast<Vertex>(rng.next_below(g.n()));
  if (state.contains(v)) {
    return rng.next_unit() < 1.0 / cfg.temperature ? state.without(v) : state;
  }
  for (Vertex u : state) {
    if (!g.has_edge(u, v)) return state;
  }
  return state.with(v);
}

MetropolisResult metropolis_attack(const Graph& g, const MetropolisConfig& cfg, Rng& rng,
                                   const Deadline& deadline) {
  check_config(g, cfg);
  MetropolisResult result;
  result.best = cfg.initial_state;
  result.final_state = cfg.initial_state;
  if (g.n() == 0) return result;

  const std::uint64_t max_steps =
      cfg.max_steps == 0 ? default_metropolis_steps(g.n()) : cfg.max_steps;
  const double accept_removal = 1.0 / cfg.temperature;

  Bitset state = cfg.initial_state.to_bitset(g.n());
  std::size_t size = cfg.initial_state.size();
  std::size_t best_size = size;
  if (cfg.target_size != 0 && size >= cfg.target_size) {
    result.reached_target = true;
    return result;
  }

  std::uint64_t step = 0;
  while (step < max_steps) {
    if ((step & 0x3fff) == 0 && step != 0 && deadline.expired()) break;
    ++step;
    const auto v = static_cast<Vertex>(rng.next_below(g.n()));
    if (state.test(v)) {
      if (rng.next_unit() < accept_removal) {
        state.reset(v);
        --size;
      }
      continue;
    }
    if (state.count_and(g.row(v)) != size) continue;
    state.set(v);
    ++size;
    if (size > best_size) {
      best_size = size;
      result.best = VertexSet::from_bitset(state);
      if (cfg.target_size != 0 && size >= cfg.target_size) {
        result.reached_target = true;
        break;
      }
    }
  }
  result.steps = step;
  result.final_state = VertexSet::from_bitset(state);
  return result;
}

}  // namespace cliquebench
