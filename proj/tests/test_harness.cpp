#include <doctest.h>

#include <sstream>

#include "cliquebench/harness.hpp"
#include "cliquebench/oracle.hpp"
#include "cliquebench/records.hpp"

using namespace cliquebench;

namespace {

PlantedInstance complete_instance(std::size_t n) { return owf_evaluate({n, 0.0, n}, 1); }

}  // namespace

TEST_CASE("invert_check examples") {
  const PlantedInstance inst = owf_evaluate({120, 0.5, 12}, 61);
  CHECK(invert_check(inst, inst.hidden_clique));
  CHECK(invert_check(inst, max_clique_exact(inst.public_graph)));

  // a non-edge pair padded to k vertices is never a clique
  Vertex a = 0, b = 1;
  for (Vertex u = 0; u < 120; ++u) {
    for (Vertex v = u + 1; v < 120; ++v) {
      if (!inst.public_graph.has_edge(u, v)) {
        a = u;
        b = v;
        u = v = 120;
      }
    }
  }
  std::vector<Vertex> padded{a, b};
  for (Vertex v = 0; padded.size() < 12; ++v) {
    if (v != a && v != b) padded.push_back(v);
  }
  CHECK_FALSE(invert_check(inst, VertexSet::from_unsorted(padded)));
  CHECK_FALSE(invert_check(inst, VertexSet{inst.hidden_clique[0]}));
  CHECK_THROWS_AS(invert_check(inst, {0, 500}), InputError);
}

TEST_CASE("registry construction") {
  const PlantParams params{100, 0.5, 10};
  CHECK(make_registry({"all"}, params).size() == attack_names().size());
  CHECK(make_registry({"greedy", "brute"}, params)[1].name == "brute");
  CHECK_THROWS_AS(make_attack("nope", params), InputError);
}

TEST_CASE("greedy inverts a complete instance") {
  const PlantedInstance inst = complete_instance(8);
  const RunAllResult r = run_all(inst, make_registry({"greedy"}, inst.params), Rng(2));
  CHECK(r.best == VertexSet{0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE(r.reports.size() == 1);
  CHECK(r.reports[0].inverted);
  CHECK(r.reports[0].matched_hidden);
}

TEST_CASE("greedy plus brute force at n=60, k=12") {
  const PlantedInstance inst = owf_evaluate({60, 0.5, 12}, 62);
  const RunAllResult r = run_all(inst, make_registry({"greedy", "brute"}, inst.params), Rng(3));
  CHECK(r.best.size() >= 12);
  CHECK(r.reports[1].inverted);
  REQUIRE(r.best_index.has_value());
  for (const AttackReport& rep : r.reports) {
    if (rep.inverted) CHECK(rep.is_valid_clique);
    if (rep.matched_hidden) CHECK(rep.inverted);
    if (rep.is_valid_clique) CHECK(rep.size <= r.best.size());
  }
}

TEST_CASE("a throwing attack becomes a failed report") {
  const PlantedInstance inst = owf_evaluate({30, 0.5, 5}, 63);
  std::vector<AttackEntry> registry = make_registry({"greedy"}, inst.params);
  registry.insert(registry.begin(), AttackEntry{"broken", [](const Graph&, const Rng&, const Deadline&) -> AttackOutcome {
                                                  throw std::runtime_error("boom");
                                                }});
  const RunAllResult r = run_all(inst, registry, Rng(4));
  CHECK(r.reports[0].error == "boom");
  CHECK_FALSE(r.reports[0].is_valid_clique);
  CHECK(r.best_index == std::optional<std::size_t>(1));
}

TEST_CASE("every attack on n=2500, k=250 and the best is the hidden clique") {
  const PlantedInstance inst = owf_evaluate({2500, 0.5, 250}, 64);
  RunOptions opts;
  opts.budget_secs = 20.0;
  const RunAllResult r = run_all(inst, make_registry({"all"}, inst.params), Rng(5), opts);
  CHECK(r.best == inst.hidden_clique);
  bool via_spectral_or_dekel = false;
  for (const AttackReport& rep : r.reports) {
    if ((rep.attack_name == "spectral" || rep.attack_name == "dekel") && rep.matched_hidden) {
      via_spectral_or_dekel = true;
    }
    if (rep.inverted) CHECK(is_clique(inst.public_graph, *rep.candidate));
  }
  CHECK(via_spectral_or_dekel);
}

TEST_CASE("experiment with one trial has 0/1 rates") {
  const PlantParams params{80, 0.5, 12};
  const ExperimentSummary s =
      run_experiment(params, 1, make_registry({"greedy", "brute"}, params), Rng(6));
  CHECK(s.trials == 1);
  REQUIRE(s.attacks.size() == 2);
  for (const AttackSummary& a : s.attacks) {
    CHECK((a.success_rate == 0.0 || a.success_rate == 1.0));
  }
  CHECK(s.best_attack == "brute");
  CHECK_THROWS_AS(run_experiment(params, 0, make_registry({"greedy"}, params), Rng(6)), InputError);
}

TEST_CASE("experiment output does not depend on the thread count") {
  const PlantParams params{150, 0.5, 14};
  const auto registry = make_registry({"greedy", "metropolis", "brute"}, params);
  ExperimentOptions one, four;
  four.threads = 4;
  const ExperimentSummary a = run_experiment(params, 6, registry, Rng(7), one);
  const ExperimentSummary b = run_experiment(params, 6, registry, Rng(7), four);
  CHECK(to_record(a).dump() == to_record(b).dump());
  std::ostringstream ca, cb;
  write_trials_csv(ca, a);
  write_trials_csv(cb, b);
  CHECK(ca.str() == cb.str());
}

TEST_CASE("distinguishing game") {
  const PlantParams params{100, 0.5, 16};
  const DistinguishingSummary s =
      run_distinguishing_game(params, 20, make_registry({"brute"}, params), Rng(8));
  CHECK(s.trials == 20);
  CHECK(s.planted_trials <= 20);
  CHECK(s.correct <= 20);
  CHECK(s.success_rate >= 0.0);
  CHECK(s.success_rate <= 1.0);
  CHECK(s.advantage == doctest::Approx(s.success_rate - 0.5));
  // k = 16 at n = 100 is far above the natural clique size, so brute force
  // separates the two worlds
  CHECK(s.success_rate >= 0.9);
}
