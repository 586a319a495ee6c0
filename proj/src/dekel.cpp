#include "cliquebench/dekel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cliquebench {

void DekelConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("dekel alpha must lie in (0,1)");
  if (!(beta > 0.0)) throw InputError("dekel beta must be positive");
  if (!(p > 0.0 && p < 1.0)) throw InputError("dekel p must lie in (0,1)");
  if (k < 1) throw InputError("dekel needs a clique size hint k >= 1");
}

double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double dekel_rho(double alpha, double beta, double c, double p) {
  const double shift = c * std::sqrt(alpha) * (1.0 - p) / std::sqrt(p * (1.0 - p));
  return (1.0 - alpha) * normal_sf(beta - shift);
}

double estimate_surviving_clique(std::size_t k, double rho, std::size_t t) {
  return static_cast<double>(k) * std::pow(rho, static_cast<double>(t));
}

InducedSubgraph dekel_phase1_iterate(const Graph& g, const DekelConfig& cfg, Rng& rng,
                                     DekelIteration* record) {
  if (g.n() == 0) throw InputError("dekel phase 1 needs a nonempty graph");
  const std::size_t n = g.n();
  Bitset sampled(n);
  std::size_t s = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (rng.next_unit() < cfg.alpha) {
      sampled.set(v);
      ++s;
    }
  }
  DekelIteration local;
  local.vertices = n;
  local.sampled = s;

  std::vector<Vertex> keep;
  if (s == 0) {
    local.noop = true;
    keep.resize(n);
    for (Vertex v = 0; v < n; ++v) keep[v] = v;
  } else {
    const double ss = static_cast<double>(s);
    const double threshold = cfg.p * ss + cfg.beta * std::sqrt(cfg.p * (1.0 - cfg.p) * ss);
    for (Vertex v = 0; v < n; ++v) {
      if (sampled.test(v)) continue;
      if (static_cast<double>(sampled.count_and(g.row(v))) >= threshold) keep.push_back(v);
    }
  }
  local.survivors = keep.size();
  if (record != nullptr) *record = local;
  return induced_subgraph(g, VertexSet::from_sorted(std::move(keep)));
}

VertexSet dekel_phase2_extract(const Graph& g_t, const DekelTrace& trace, const DekelConfig& cfg) {
  const double k_t = estimate_surviving_clique(cfg.k, trace.rho, trace.iterations.size());
  const double threshold =
      cfg.p * static_cast<double>(g_t.n()) + 0.5 * (1.0 - cfg.p) * k_t;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g_t.n(); ++v) {
    if (static_cast<double>(g_t.degree(v)) >= threshold) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

DekelCompletion dekel_phase3_complete(const Graph& g, const VertexSet& k_bar,
                                      const DekelConfig& cfg) {
  if (k_bar.empty()) throw InputError("dekel phase 3 needs a nonempty seed set");
  check_vertices(g, k_bar);
  const std::size_t n = g.n();
  const double half_up = 0.5 * (1.0 + cfg.p);

  const Bitset seed = k_bar.to_bitset(n);
  Bitset k_prime = seed;
  const double seed_threshold = half_up * static_cast<double>(k_bar.size());
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(seed.count_and(g.row(v))) >= seed_threshold) k_prime.set(v);
  }

  const double final_threshold = half_up * static_cast<double>(cfg.k);
  std::vector<std::pair<std::size_t, Vertex>> ranked;  // (neighbors in K', v)
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = k_prime.count_and(g.row(v));
    if (static_cast<double>(d) >= final_threshold) ranked.emplace_back(d, v);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  if (ranked.size() > cfg.k) ranked.resize(cfg.k);

  DekelCompletion out;
  std::vector<Vertex> members;
  for (const auto& entry : ranked) members.push_back(entry.second);
  out.clique = VertexSet::from_unsorted(std::move(members));
  out.undersized = out.clique.size() < cfg.k;
  return out;
}

DekelResult dekel_attack(const Graph& g, const DekelConfig& cfg, Rng& rng,
                         const Deadline& deadline) {
  cfg.validate();
  DekelResult result;
  const std::size_t n = g.n();
  if (n == 0) return result;
  const double c = static_cast<double>(cfg.k) / std::sqrt(static_cast<double>(n));
  result.trace.rho = dekel_rho(cfg.alpha, cfg.beta, c, cfg.p);
  const std::size_t t_max =
      cfg.t_max != 0 ? cfg.t_max
                     : static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n))));

  InducedSubgraph current{g, {}};
  current.to_original.resize(n);
  for (Vertex v = 0; v < n; ++v) current.to_original[v] = v;

  while (result.trace.iterations.size() < t_max && !deadline.expired()) {
    const std::size_t i = result.trace.iterations.size();
    const double floor = std::max(static_cast<double>(cfg.min_survivors),
                                  4.0 * estimate_surviving_clique(cfg.k, result.trace.rho, i));
    if (static_cast<double>(current.graph.n()) <= floor) break;
    DekelIteration record;
    InducedSubgraph next = dekel_phase1_iterate(current.graph, cfg, rng, &record);
    record.estimated_clique = estimate_surviving_clique(cfg.k, result.trace.rho, i + 1);
    result.trace.iterations.push_back(record);
    for (auto& v : next.to_original) v = current.to_original[v];
    current = std::move(next);
    if (current.graph.n() == 0) break;
  }

  const VertexSet local_bar = dekel_phase2_extract(current.graph, result.trace, cfg);
  result.k_bar = current.map_to_original(local_bar);
  if (result.k_bar.empty()) {
    result.undersized = true;
    return result;
  }
  DekelCompletion done = dekel_phase3_complete(g, result.k_bar, cfg);
  result.clique = std::move(done.clique);
  result.undersized = done.undersized;
  result.success = !result.undersized && is_clique(g, result.clique);
  return result;
}

}  // namespace cliquebench
