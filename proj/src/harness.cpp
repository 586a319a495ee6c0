#include "cliquebench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cliquebench/dekel.hpp"
#include "cliquebench/feige.hpp"
#include "cliquebench/greedy.hpp"
#include "cliquebench/metropolis.hpp"
#include "cliquebench/oracle.hpp"
#include "cliquebench/spectral.hpp"

namespace cliquebench {

AttackEntry make_attack(const std::string& name, const PlantParams& params,
                        const AttackOptions& opts) {
  const std::size_t k = params.k;
  const double p = params.p;
  if (name == "greedy") {
    return {name, [opts](const Graph& g, const Rng& rng, const Deadline& deadline) {
              GreedyConfig cfg;
              cfg.restarts = opts.greedy_restarts;
              GreedyResult r = greedy_attack(g, cfg, rng, deadline);
              return AttackOutcome{std::move(r.clique), r.iterations, false};
            }};
  }
  if (name == "metropolis") {
    return {name, [opts, k](const Graph& g, const Rng& rng, const Deadline& deadline) {
              MetropolisConfig cfg;
              cfg.temperature = opts.metropolis_temperature;
              cfg.max_steps = opts.metropolis_steps;
              cfg.target_size = k;
              Rng stream = rng;
              MetropolisResult r = metropolis_attack(g, cfg, stream, deadline);
              return AttackOutcome{std::move(r.best), r.steps, deadline.expired()};
            }};
  }
  if (name == "spectral") {
    return {name, [opts, k](const Graph& g, const Rng&, const Deadline& deadline) {
              SpectralConfig cfg;
              cfg.k = k;
              BoostedSpectralResult r =
                  spectral_boosted_attack(g, cfg, opts.spectral_subset_budget, deadline);
              return AttackOutcome{std::move(r.clique), r.subsets_examined, r.budget_exceeded};
            }};
  }
  if (name == "dekel") {
    return {name, [opts, k, p](const Graph& g, const Rng& rng, const Deadline& deadline) {
              DekelConfig cfg;
              cfg.alpha = opts.dekel_alpha;
              cfg.beta = opts.dekel_beta;
              cfg.p = p;
              cfg.k = k;
              Rng stream = rng;
              DekelResult r = dekel_attack(g, cfg, stream, deadline);
              AttackOutcome out;
              if (!r.clique.empty()) out.candidate = std::move(r.clique);
              out.steps = r.trace.iterations.size();
              return out;
            }};
  }
  if (name == "feige") {
    return {name, [opts, k](const Graph& g, const Rng&, const Deadline& deadline) {
              if (k < 1) throw InputError("feige needs k >= 1 to set its density ratio");
              FeigeConfig cfg;
              cfg.density_ratio = (g.n() + k - 1) / k;
              cfg.t = opts.feige_asymptotic_t ? feige_asymptotic_t(g.n()) : opts.feige_t;
              FeigeResult r = feige_attack(g, cfg, deadline);
              return AttackOutcome{std::move(r.clique), r.subsets_examined, r.budget_exceeded};
            }};
  }
  if (name == "brute") {
    return {name, [opts, k](const Graph& g, const Rng&, const Deadline& deadline) {
              BruteForceResult r = brute_force_attack(g, k, opts.brute_force_budget, deadline);
              return AttackOutcome{std::move(r.clique), r.examined, r.budget_exceeded};
            }};
  }
  throw InputError("unknown attack '" + name + "'");
}

std::vector<AttackEntry> make_registry(const std::vector<std::string>& names,
                                       const PlantParams& params, const AttackOptions& opts) {
  std::vector<AttackEntry> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& each : attack_names()) out.push_back(make_attack(each, params, opts));
    } else {
      out.push_back(make_attack(name, params, opts));
    }
  }
  return out;
}

bool invert_check(const PlantedInstance& instance, const VertexSet& candidate) {
  check_vertices(instance.public_graph, candidate);
  return candidate.size() >= instance.params.k && is_clique(instance.public_graph, candidate);
}

RunAllResult run_all(const PlantedInstance& instance, const std::vector<AttackEntry>& registry,
                     const Rng& rng, const RunOptions& opts) {
  if (registry.empty()) throw InputError("run_all needs at least one attack");
  const Graph& g = instance.public_graph;
  RunAllResult result;
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const AttackEntry& entry = registry[i];
    AttackReport report;
    report.attack_name = entry.name;
    const Rng child = rng.child("attack/" + std::to_string(i) + "/" + entry.name);
    report.seed = child.seed();
    const Deadline deadline =
        opts.budget_secs > 0.0 ? Deadline(std::chrono::duration<double>(opts.budget_secs))
                               : Deadline();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      AttackOutcome outcome = entry.run(g, child, deadline);
      report.steps = outcome.steps;
      report.budget_exceeded = outcome.budget_exceeded;
      report.candidate = std::move(outcome.candidate);
    } catch (const std::exception& e) {
      report.error = e.what();
      report.candidate.reset();
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (report.candidate) {
      const VertexSet& c = *report.candidate;
      report.size = c.size();
      const bool in_range = c.empty() || c.bound() <= g.n();
      report.is_valid_clique = in_range && is_clique(g, c);
      report.inverted = report.is_valid_clique && c.size() >= instance.params.k;
      report.matched_hidden = report.inverted && c == instance.hidden_clique;
      if (report.is_valid_clique &&
          (!result.best_index || c.size() > result.best.size())) {
        result.best = c;
        result.best_index = i;
      }
    }
    result.reports.push_back(std::move(report));
  }

  std::size_t largest = 0;
  for (const auto& r : result.reports) {
    if (r.inverted && !(r.is_valid_clique && r.size >= instance.params.k)) {
      throw std::logic_error("report marked inverted without a valid k-clique");
    }
    if (r.matched_hidden && !r.inverted) throw std::logic_error("matched_hidden without inversion");
    if (r.is_valid_clique) largest = std::max(largest, r.size);
  }
  if (result.best.size() != largest) throw std::logic_error("best is not the largest valid clique");
  return result;
}

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExperimentSummary run_experiment(const PlantParams& params, std::size_t trials,
                                 const std::vector<AttackEntry>& registry, const Rng& rng,
                                 const ExperimentOptions& opts) {
  if (trials < 1) throw InputError("run_experiment needs trials >= 1");
  if (registry.empty()) throw InputError("run_experiment needs at least one attack");
  params.validate();
  ExperimentSummary summary;
  summary.params = params;
  summary.trials = trials;
  summary.records.resize(trials);

  parallel_for(trials, opts.threads, [&](std::size_t i) {
    const std::string prefix = "trial/" + std::to_string(i);
    Rng instance_rng = rng.child(prefix + "/instance");
    const PlantedInstance inst = owf_evaluate(params, instance_rng);
    RunAllResult run = run_all(inst, registry, rng.child(prefix + "/attacks"), opts.run);
    TrialRecord& rec = summary.records[i];
    rec.trial = i;
    rec.instance_seed = inst.seed;
    rec.best_size = run.best.size();
    rec.reports = std::move(run.reports);
  });

  for (std::size_t a = 0; a < registry.size(); ++a) {
    AttackSummary s;
    s.attack_name = registry[a].name;
    s.min_size = std::numeric_limits<std::size_t>::max();
    double size_total = 0.0;
    double time_total = 0.0;
    for (const auto& rec : summary.records) {
      const AttackReport& r = rec.reports[a];
      const std::size_t size = r.is_valid_clique ? r.size : 0;
      s.inversions += r.inverted ? 1 : 0;
      s.matches += r.matched_hidden ? 1 : 0;
      size_total += static_cast<double>(size);
      time_total += r.wall_time;
      s.min_size = std::min(s.min_size, size);
      s.max_size = std::max(s.max_size, size);
    }
    const auto n = static_cast<double>(trials);
    s.success_rate = static_cast<double>(s.inversions) / n;
    s.mean_size = size_total / n;
    s.mean_wall_time = time_total / n;
    summary.attacks.push_back(std::move(s));
  }
  std::size_t best = 0;
  for (std::size_t a = 1; a < summary.attacks.size(); ++a) {
    if (summary.attacks[a].success_rate > summary.attacks[best].success_rate) best = a;
  }
  summary.best_attack = summary.attacks[best].attack_name;
  return summary;
}

DistinguishingSummary run_distinguishing_game(const PlantParams& params, std::size_t trials,
                                              const std::vector<AttackEntry>& registry,
                                              const Rng& rng, const ExperimentOptions& opts) {
  if (trials < 1) throw InputError("distinguishing game needs trials >= 1");
  params.validate();
  struct Outcome {
    bool planted = false;
    bool guessed_planted = false;
  };
  std::vector<Outcome> outcomes(trials);
  parallel_for(trials, opts.threads, [&](std::size_t i) {
    const std::string prefix = "game/" + std::to_string(i);
    Rng coin = rng.child(prefix + "/coin");
    const bool planted = coin.next_below(2) == 1;
    Rng instance_rng = rng.child(prefix + "/instance");
    PlantedInstance inst;
    if (planted) {
      inst = owf_evaluate(params, instance_rng);
    } else {
      inst.public_graph = sample_gnp(params.n, params.p, instance_rng);
      inst.params = params;
      inst.seed = instance_rng.seed();
    }
    const RunAllResult run = run_all(inst, registry, rng.child(prefix + "/attacks"), opts.run);
    bool found = false;
    for (const auto& r : run.reports) found = found || r.inverted;
    outcomes[i] = {planted, found};
  });

  DistinguishingSummary s;
  s.trials = trials;
  for (const auto& o : outcomes) {
    s.planted_trials += o.planted ? 1 : 0;
    s.correct += o.planted == o.guessed_planted ? 1 : 0;
    s.inversions += o.planted && o.guessed_planted ? 1 : 0;
  }
  s.success_rate = static_cast<double>(s.correct) / static_cast<double>(trials);
  s.advantage = s.success_rate - 0.5;
  return s;
}

}  // namespace cliquebench
