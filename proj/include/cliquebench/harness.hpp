#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliquebench/budget.hpp"
#include "cliquebench/graph.hpp"
#include "cliquebench/instance.hpp"
#include "cliquebench/rng.hpp"

namespace cliquebench {

struct AttackOutcome {
  std::optional<VertexSet> candidate;  // empty when the attack produced nothing
  std::uint64_t steps = 0;             // attack-specific work counter
  bool budget_exceeded = false;
};

/// An attack sees the public graph only; the hidden clique never reaches it.
using AttackFn = std::function<AttackOutcome(const Graph&, const Rng&, const Deadline&)>;

struct AttackEntry {
  std::string name;
  AttackFn run;
};

struct AttackOptions {
  std::size_t greedy_restarts = 1;
  double metropolis_temperature = 2.0;
  std::uint64_t metropolis_steps = 0;        // 0: default for n
  std::uint64_t brute_force_budget = 50'000'000;  // prefixes visited
  std::uint64_t spectral_subset_budget = 20'000;
  double dekel_alpha = 0.5;
  double dekel_beta = 1.3;
  std::size_t feige_t = 2;
  bool feige_asymptotic_t = false;
};

inline const std::vector<std::string>& attack_names() {
  static const std::vector<std::string> names = {"greedy", "metropolis", "spectral",
                                                 "dekel",  "feige",      "brute"};
  return names;
}

/// Registry entry for a named attack, configured for instances with the
/// given public parameters. Throws InputError for unknown names.
AttackEntry make_attack(const std::string& name, const PlantParams& params,
                        const AttackOptions& opts = {});

/// Entries for `names` in order; "all" expands to every attack.
std::vector<AttackEntry> make_registry(const std::vector<std::string>& names,
                                       const PlantParams& params, const AttackOptions& opts = {});

struct AttackReport {
  std::string attack_name;
  std::optional<VertexSet> candidate;
  bool is_valid_clique = false;
  std::size_t size = 0;
  bool inverted = false;        // a clique of at least k vertices of the public graph
  bool matched_hidden = false;  // equal to the hidden clique
  double wall_time = 0.0;       // seconds
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  bool budget_exceeded = false;
  std::string error;            // set when the attack threw
};

/// True iff candidate is a clique of the public graph with at least k
/// vertices, i.e. planting it again leaves the graph unchanged. Throws
/// InputError on out-of-range vertices.
bool invert_check(const PlantedInstance& instance, const VertexSet& candidate);

struct RunOptions {
  double budget_secs = 60.0;  // per attack; <= 0 disables
};

struct RunAllResult {
  VertexSet best;
  std::optional<std::size_t> best_index;  // registry position of the best report
  std::vector<AttackReport> reports;      // registry order
};

/// Runs every registered attack on the public graph. Attack i draws from
/// rng.child("attack/<i>/<name>"). A throwing attack becomes a failed
/// report. best is the largest valid clique, ties to the earlier entry.
RunAllResult run_all(const PlantedInstance& instance, const std::vector<AttackEntry>& registry,
                     const Rng& rng, const RunOptions& opts = {});

struct AttackSummary {
  std::string attack_name;
  std::size_t inversions = 0;
  std::size_t matches = 0;
  double success_rate = 0.0;  // inversions / trials
  double mean_size = 0.0;     // over valid candidates, 0 counted for the rest
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  double mean_wall_time = 0.0;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t instance_seed = 0;
  std::vector<AttackReport> reports;
  std::size_t best_size = 0;
};

struct ExperimentSummary {
  PlantParams params;
  std::size_t trials = 0;
  std::vector<AttackSummary> attacks;  // registry order
  std::string best_attack;             // highest success rate, ties to the earlier entry
  std::vector<TrialRecord> records;
};

struct ExperimentOptions {
  RunOptions run;
  std::size_t threads = 1;
};

/// Trial i plants an instance from rng.child("trial/<i>/instance") and runs
/// the registry with rng.child("trial/<i>/attacks"). Results do not depend
/// on the thread count.
ExperimentSummary run_experiment(const PlantParams& params, std::size_t trials,
                                 const std::vector<AttackEntry>& registry, const Rng& rng,
                                 const ExperimentOptions& opts = {});

struct DistinguishingSummary {
  std::size_t trials = 0;
  std::size_t planted_trials = 0;
  std::size_t correct = 0;
  std::size_t inversions = 0;  // planted trials where some attack found a k-clique
  double success_rate = 0.0;   // correct / trials
  double advantage = 0.0;      // success_rate - 1/2
};

/// The coin-flip game: per trial a fair coin picks a planted instance or a
/// plain G(n,p) sample, and the distinguisher answers "planted" exactly when
/// some attack returns a k-clique.
DistinguishingSummary run_distinguishing_game(const PlantParams& params, std::size_t trials,
                                              const std::vector<AttackEntry>& registry,
                                              const Rng& rng, const ExperimentOptions& opts = {});

}  // namespace cliquebench
