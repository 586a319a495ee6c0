#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "cliquebench/dekel.hpp"
#include "cliquebench/instance.hpp"

using namespace cliquebench;

namespace {

double hidden_fraction(const VertexSet& vertices, const VertexSet& hidden) {
  if (vertices.empty()) return 0.0;
  std::size_t in = 0;
  for (Vertex v : vertices) in += hidden.contains(v);
  return static_cast<double>(in) / static_cast<double>(vertices.size());
}

}  // namespace

TEST_CASE("normal tail matches a 50-digit reference") {
  using Big = boost::multiprecision::cpp_bin_float_50;
  for (int i = 0; i < 100; ++i) {
    const double x = -6.0 + 12.0 * i / 99.0;
    const Big ref = boost::multiprecision::erfc(Big(x) / boost::multiprecision::sqrt(Big(2))) / 2;
    const double want = ref.convert_to<double>();
    CHECK(std::abs(normal_sf(x) - want) <= 1e-12 * want);
  }
  CHECK(normal_sf(0.0) == doctest::Approx(0.5));
}

TEST_CASE("rho at p = 1/2 reduces to (1 - alpha) sf(beta - c sqrt(alpha))") {
  for (double alpha : {0.2, 0.5, 0.8}) {
    for (double beta : {0.5, 1.3, 2.0}) {
      for (double c : {1.0, 3.0, 5.0}) {
        const double direct = (1.0 - alpha) * normal_sf(beta - c * std::sqrt(alpha));
        CHECK(std::abs(dekel_rho(alpha, beta, c, 0.5) - direct) <= 1e-12);
      }
    }
  }
  CHECK(estimate_surviving_clique(300, 0.5, 2) == doctest::Approx(75.0));
}

TEST_CASE("config validation") {
  DekelConfig cfg;
  cfg.k = 5;
  CHECK_NOTHROW(cfg.validate());
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.alpha = 0.5;
  cfg.beta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.beta = 1.3;
  cfg.k = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
}

TEST_CASE("phase 1 on complete and edgeless graphs") {
  DekelConfig cfg;
  cfg.k = 10;
  Rng rng(1);
  DekelIteration rec;
  const InducedSubgraph full = dekel_phase1_iterate(Graph::complete(200), cfg, rng, &rec);
  CHECK(rec.vertices == 200);
  CHECK(full.graph.n() == 200 - rec.sampled);
  CHECK(rec.survivors == full.graph.n());

  const InducedSubgraph none = dekel_phase1_iterate(Graph(200), cfg, rng, &rec);
  CHECK(none.graph.n() == 0);
  CHECK_THROWS_AS(dekel_phase1_iterate(Graph(0), cfg, rng), InputError);
}

TEST_CASE("phase 2 examples") {
  DekelConfig cfg;
  cfg.k = 12;
  DekelTrace trace;
  trace.rho = 0.5;
  CHECK(dekel_phase2_extract(Graph::complete(12), trace, cfg).size() == 12);
  CHECK(dekel_phase2_extract(Graph(12), trace, cfg).empty());
}

TEST_CASE("phase 3 examples") {
  DekelConfig cfg;
  cfg.k = 10;
  const DekelCompletion done = dekel_phase3_complete(Graph::complete(10), {0, 2, 4, 6, 8}, cfg);
  CHECK(done.clique.size() == 10);
  CHECK_FALSE(done.undersized);
  CHECK_THROWS_AS(dekel_phase3_complete(Graph::complete(10), {}, cfg), InputError);

  const DekelCompletion thin = dekel_phase3_complete(Graph(10), {1}, cfg);
  CHECK(thin.undersized);
}

TEST_CASE("phases on a planted n=10000, k=300 instance") {
  const PlantedInstance inst = owf_evaluate({10000, 0.5, 300}, 404);
  const VertexSet& hidden = inst.hidden_clique;
  DekelConfig cfg;
  cfg.k = 300;

  Rng rng(405);
  std::vector<Vertex> all(10000);
  for (Vertex v = 0; v < 10000; ++v) all[v] = v;
  const InducedSubgraph g1 = dekel_phase1_iterate(inst.public_graph, cfg, rng);
  const VertexSet survivors = VertexSet::from_sorted(g1.to_original);
  CHECK(hidden_fraction(survivors, hidden) > hidden_fraction(VertexSet::from_sorted(all), hidden));

  Rng attack_rng(406);
  const DekelResult r = dekel_attack(inst.public_graph, cfg, attack_rng);
  for (std::size_t i = 1; i < r.trace.iterations.size(); ++i) {
    CHECK(r.trace.iterations[i].vertices == r.trace.iterations[i - 1].survivors);
  }
  CHECK_FALSE(r.k_bar.empty());
  CHECK(r.k_bar.is_subset_of(hidden));
  CHECK(r.success);
  CHECK(r.clique == hidden);
}

TEST_CASE("a tiny clique is below the method's regime") {
  Rng gen(7);
  const Graph g = sample_gnp(100, 0.5, gen);
  DekelConfig cfg;
  cfg.k = 3;
  Rng rng(8);
  const DekelResult r = dekel_attack(g, cfg, rng);
  CHECK_FALSE(r.success);
}
