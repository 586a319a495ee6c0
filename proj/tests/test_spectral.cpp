#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "cliquebench/eigensolver.hpp"
#include "cliquebench/instance.hpp"
#include "cliquebench/spectral.hpp"

using namespace cliquebench;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Graph disjoint_union_of_cliques(std::size_t copies, std::size_t size, std::size_t padding) {
  GraphBuilder b(copies * size + padding);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        b.add_edge(static_cast<Vertex>(c * size + i), static_cast<Vertex>(c * size + j));
      }
    }
  }
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

}  // namespace

TEST_CASE("top eigenpairs of K4 and an edgeless graph") {
  const auto [a1, a2] = top_two_eigenpairs(Graph::complete(4));
  CHECK(a1.value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(a2.value == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::abs(dot(a1.vector, a2.vector)) <= 1e-6);

  const auto [e1, e2] = top_two_eigenpairs(Graph(6));
  CHECK(std::abs(e1.value) <= 1e-12);
  CHECK(std::abs(e2.value) <= 1e-12);
  CHECK(std::abs(dot(e1.vector, e1.vector) - 1.0) <= 1e-12);

  CHECK_THROWS_AS(top_two_eigenpairs(Graph(1)), InputError);
}

TEST_CASE("eigenpairs match a dense reference on G(64, 1/2)") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    Rng rng(seed);
    const Graph g = sample_gnp(64, 0.5, rng);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(64, 64);
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(a);
    const auto& values = dense.eigenvalues();  // ascending

    EigenOptions opts;
    const auto [p1, p2] = top_two_eigenpairs(g, opts);
    CHECK(std::abs(p1.value - values(63)) <= 1e-6);
    CHECK(std::abs(p2.value - values(62)) <= 1e-6);
    CHECK(eigen_residual(g, p1) <= opts.tol * std::max(1.0, std::abs(p1.value)));
    CHECK(eigen_residual(g, p2) <= opts.tol * std::max(1.0, std::abs(p2.value)));
    CHECK(std::abs(dot(p1.vector, p2.vector)) <= 1e-6);
  }
}

TEST_CASE("repeated top eigenvalue is returned twice") {
  const auto [p1, p2] = top_two_eigenpairs(disjoint_union_of_cliques(2, 10, 10));
  CHECK(p1.value == doctest::Approx(9.0).epsilon(1e-9));
  CHECK(p2.value == doctest::Approx(9.0).epsilon(1e-9));
  CHECK(std::abs(dot(p1.vector, p2.vector)) <= 1e-6);
}

TEST_CASE("base attack on two disjoint K10s picks one of them") {
  const Graph g = disjoint_union_of_cliques(2, 10, 10);
  SpectralConfig cfg;
  cfg.k = 10;
  const VertexSet q = spectral_base_attack(g, cfg);
  CHECK(q.size() == 10);
  CHECK(is_clique(g, q));
}

TEST_CASE("base attack on an edgeless graph is empty") {
  SpectralConfig cfg;
  cfg.k = 4;
  CHECK(spectral_base_attack(Graph(12), cfg).empty());
}

TEST_CASE("base attack recovers k = 10 sqrt(n)") {
  const PlantedInstance inst = owf_evaluate({900, 0.5, 300}, 17);
  SpectralConfig cfg;
  cfg.k = 300;
  EigenPair v2;
  CHECK(spectral_base_attack(inst.public_graph, cfg, &v2) == inst.hidden_clique);
  CHECK(eigen_residual(inst.public_graph, v2) <= cfg.eig_tol * std::max(1.0, std::abs(v2.value)));
}

TEST_CASE("subset size") {
  CHECK(derive_subset_size(10.0) == 2);
  CHECK(derive_subset_size(5.0) == 4);
  CHECK(derive_subset_size(2.5) == 6);
  CHECK(derive_subset_size(100.0) == 0);
  CHECK_THROWS_AS(derive_subset_size(0.0), InputError);
  CHECK_THROWS_AS(derive_subset_size(-1.0), InputError);
}

TEST_CASE("clique enumeration visits cliques in lexicographic order") {
  std::vector<VertexSet> seen;
  const auto visited = for_each_clique_of_size(Graph::complete(5), 3, kUnlimited, {},
                                               [&](const VertexSet& s) {
                                                 seen.push_back(s);
                                                 return false;
                                               });
  CHECK(visited == 10);
  REQUIRE(seen.size() == 10);
  CHECK(seen.front() == VertexSet{0, 1, 2});
  CHECK(seen.back() == VertexSet{2, 3, 4});
  CHECK(std::is_sorted(seen.begin(), seen.end(), [](const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }));
  CHECK(for_each_clique_of_size(cycle(8), 3, kUnlimited, {}, [](const VertexSet&) { return false; }) == 0);
  CHECK(for_each_clique_of_size(Graph::complete(6), 2, 4, {}, [](const VertexSet&) { return false; }) == 4);
}

TEST_CASE("boosted attack at n=2500, k=250") {
  const PlantedInstance inst = owf_evaluate({2500, 0.5, 250}, 29);
  SpectralConfig cfg;
  cfg.k = 250;
  const BoostedSpectralResult r = spectral_boosted_attack(inst.public_graph, cfg, 20000);
  CHECK(r.subset_size == 4);
  CHECK(r.c == doctest::Approx(5.0));
  REQUIRE(r.clique.has_value());
  CHECK(*r.clique == inst.hidden_clique);
}

TEST_CASE("boosted attack fails on a triangle-free graph") {
  SpectralConfig cfg;
  cfg.k = 3;
  const BoostedSpectralResult r = spectral_boosted_attack(cycle(30), cfg, kUnlimited);
  CHECK_FALSE(r.clique.has_value());
  CHECK_FALSE(r.budget_exceeded);
}
