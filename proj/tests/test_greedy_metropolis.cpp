#include <doctest.h>

#include <boost/rational.hpp>
#include <map>
#include <vector>

#include "cliquebench/greedy.hpp"
#include "cliquebench/instance.hpp"
#include "cliquebench/metropolis.hpp"
#include "cliquebench/oracle.hpp"

using namespace cliquebench;

namespace {

using Rational = boost::rational<long long>;

std::vector<VertexSet> all_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    VertexSet s = VertexSet::from_sorted(std::move(members));
    if (is_clique(g, s)) out.push_back(std::move(s));
  }
  return out;
}

Rational power(Rational base, std::size_t e) {
  Rational r(1);
  while (e--) r *= base;
  return r;
}

}  // namespace

TEST_CASE("greedy on complete and edgeless graphs") {
  CHECK(greedy_attack(Graph::complete(7), {}, Rng(1)).clique.size() == 7);
  CHECK(greedy_attack(Graph(7), {}, Rng(1)).clique.size() == 1);
  CHECK_THROWS_AS(greedy_attack(Graph(0), {}, Rng(1)), InputError);
}

TEST_CASE("greedy returns maximal cliques") {
  Rng rng(40);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = sample_gnp(120, 0.5, rng);
    const VertexSet c = greedy_attack(g, {3}, rng.child("greedy/" + std::to_string(rep))).clique;
    REQUIRE(is_clique(g, c));
    CHECK(common_neighbors(g, c).empty());
  }
}

TEST_CASE("greedy is deterministic for a given stream") {
  Rng rng(41);
  const Graph g = sample_gnp(200, 0.5, rng);
  CHECK(greedy_attack(g, {4}, Rng(5)).clique == greedy_attack(g, {4}, Rng(5)).clique);
}

TEST_CASE("metropolis step validates its input") {
  const Graph g = Graph::complete(3);
  Rng rng(1);
  MetropolisConfig cfg;
  cfg.temperature = 0.5;
  CHECK_THROWS_AS(metropolis_step(g, {}, cfg, rng), InputError);
  cfg.temperature = 2.0;
  CHECK_THROWS_AS(metropolis_step(Graph(3), {0, 1}, cfg, rng), InputError);
}

TEST_CASE("metropolis moves stay among cliques and differ by one vertex") {
  Rng rng(42);
  const Graph g = sample_gnp(30, 0.5, rng);
  MetropolisConfig cfg;
  VertexSet state;
  for (int i = 0; i < 5000; ++i) {
    const VertexSet next = metropolis_step(g, state, cfg, rng);
    REQUIRE(is_clique(g, next));
    const std::size_t a = state.size(), b = next.size();
    REQUIRE((a == b || a + 1 == b || b + 1 == a));
    if (a == b) REQUIRE(next == state);
    state = next;
  }
}

TEST_CASE("metropolis on K6 at high temperature reaches the full clique") {
  MetropolisConfig cfg;
  cfg.temperature = 10.0;
  cfg.max_steps = 10000;
  Rng rng(43);
  const MetropolisResult r = metropolis_attack(Graph::complete(6), cfg, rng);
  CHECK(r.best.size() == 6);
  CHECK(is_clique(Graph::complete(6), r.final_state));
}

TEST_CASE("metropolis on an edgeless graph never exceeds one vertex") {
  MetropolisConfig cfg;
  cfg.max_steps = 2000;
  Rng rng(44);
  const MetropolisResult r = metropolis_attack(Graph(8), cfg, rng);
  CHECK(r.best.size() == 1);
  CHECK(r.steps == 2000);
}

TEST_CASE("metropolis stops at the target size") {
  const PlantedInstance inst = owf_evaluate({60, 0.5, 15}, 9);
  MetropolisConfig cfg;
  cfg.target_size = 15;
  cfg.max_steps = 5'000'000;
  Rng rng(45);
  const MetropolisResult r = metropolis_attack(inst.public_graph, cfg, rng);
  CHECK(r.reached_target);
  CHECK(r.best.size() >= 15);
  CHECK(r.steps < cfg.max_steps);
}

TEST_CASE("default step count") {
  CHECK(default_metropolis_steps(1) == 1);
  CHECK(default_metropolis_steps(100) == 46052);
}

TEST_CASE("transition probabilities satisfy detailed balance exactly") {
  Rng rng(46);
  for (int rep = 0; rep < 6; ++rep) {
    const Graph g = sample_gnp(7, 0.5, rng);
    const Rational temperature(3, 1);
    const std::vector<VertexSet> cliques = all_cliques(g);
    for (const VertexSet& a : cliques) {
      Rational row(0);
      for (const VertexSet& b : cliques) {
        const Rational pab = transition_probability(g, a, b, temperature);
        const Rational pba = transition_probability(g, b, a, temperature);
        row += pab;
        // stationary weight proportional to temperature^|C|
        CHECK(power(temperature, a.size()) * pab == power(temperature, b.size()) * pba);
      }
      CHECK(row == Rational(1));
    }
  }
}
