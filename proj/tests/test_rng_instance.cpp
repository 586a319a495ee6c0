#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "cliquebench/dimacs.hpp"
#include "cliquebench/instance.hpp"
#include "cliquebench/oracle.hpp"
#include "cliquebench/rng.hpp"

using namespace cliquebench;

TEST_CASE("same seed, same stream") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("child streams depend on label and not on parent position") {
  Rng a(1);
  const std::uint64_t before = a.child("x").next_u64();
  a.next_u64();
  CHECK(a.child("x").next_u64() == before);
  CHECK(a.child("x").seed() != a.child("y").seed());
  CHECK(derive_seed(1, "x") != derive_seed(2, "x"));
}

TEST_CASE("next_unit lies in [0,1)") {
  Rng r(4);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.next_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("next_below is uniform") {
  Rng r(9);
  std::vector<int> counts(7, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) ++counts[r.next_below(7)];
  // chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - draws / 7.0) * (c - draws / 7.0) / (draws / 7.0);
  CHECK(chi2 < 22.46);
  CHECK_THROWS_AS(r.next_below(0), InputError);
}

TEST_CASE("bernoulli edge cases and frequency") {
  Rng r(2);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE_FALSE(r.next_bernoulli(0.0));
    REQUIRE(r.next_bernoulli(1.0));
  }
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += r.next_bernoulli(0.5);
  CHECK(std::abs(hits / 100000.0 - 0.5) <= 0.01);
  CHECK_THROWS_AS(r.next_bernoulli(1.5), InputError);
  CHECK_THROWS_AS(r.next_bernoulli(-0.1), InputError);
}

TEST_CASE("sample_subset") {
  Rng r(3);
  CHECK(sample_subset(r, 5, 5) == VertexSet{0, 1, 2, 3, 4});
  CHECK(sample_subset(r, 5, 0).empty());
  CHECK_THROWS_AS(sample_subset(r, 3, 4), InputError);

  std::map<std::pair<Vertex, Vertex>, int> freq;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    const VertexSet s = sample_subset(r, 4, 2);
    REQUIRE(s.size() == 2);
    ++freq[{s[0], s[1]}];
  }
  CHECK(freq.size() == 6);
  for (const auto& [pair, count] : freq) CHECK(std::abs(count / double(draws) - 1.0 / 6.0) <= 0.01);
}

TEST_CASE("sample_gnp extremes and edge density") {
  Rng r(10);
  CHECK(sample_gnp(6, 1.0, r).edge_count() == 15);
  CHECK(sample_gnp(6, 0.0, r).edge_count() == 0);
  const Graph g = sample_gnp(1000, 0.5, r);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - 249750.0) <= 1412.0);
  CHECK(g.check_invariants());
}

TEST_CASE("plant_clique") {
  const Graph e5(5);
  const Graph t = plant_clique(e5, {0, 1, 2});
  CHECK(t.edge_count() == 3);
  CHECK(is_clique(t, {0, 1, 2}));
  CHECK(plant_clique(Graph::complete(5), {1, 3}) == Graph::complete(5));

  Rng r(11);
  const Graph g = sample_gnp(100, 0.5, r);
  const VertexSet s = sample_subset(r, 100, 10);
  const Graph h = plant_clique(g, s);
  CHECK(is_clique(h, s));
  for (const auto& [u, v] : g.edges()) REQUIRE(h.has_edge(u, v));
}

TEST_CASE("owf_evaluate") {
  const PlantedInstance a = owf_evaluate({10, 0.5, 4}, 77);
  CHECK(a.hidden_clique.size() == 4);
  CHECK(is_clique(a.public_graph, a.hidden_clique));
  CHECK(a.seed == 77);

  const PlantedInstance b = owf_evaluate({10, 0.5, 4}, 77);
  CHECK(a.public_graph == b.public_graph);
  CHECK(a.hidden_clique == b.hidden_clique);

  CHECK(owf_evaluate({10, 0.0, 10}, 1).public_graph == Graph::complete(10));
  CHECK_THROWS_AS(owf_evaluate({10, 0.5, 11}, 1), InputError);
  CHECK_THROWS_AS(owf_evaluate({10, 1.5, 3}, 1), InputError);

  const PlantedInstance c = owf_evaluate({200, 0.5, 15}, 5);
  CHECK(clique_number(c.public_graph) >= 15);
}

TEST_CASE("epsilon and target range") {
  const PlantParams p{1024, 0.5, 15};
  CHECK(p.log_inv_p_n() == doctest::Approx(10.0));
  CHECK(p.epsilon() == doctest::Approx(0.5));
  CHECK(p.in_target_range());
  CHECK_FALSE((PlantParams{1024, 0.5, 21}).in_target_range());
  CHECK(std::isnan((PlantParams{1024, 1.0, 5}).epsilon()));
}

TEST_CASE("natural clique size experiment") {
  Rng r(12);
  CHECK(natural_clique_size_experiment(1, 0.5, 3, r).mean == 1.0);
  CHECK(natural_clique_size_experiment(9, 1.0, 2, r).mean == 9.0);
  const auto s = natural_clique_size_experiment(60, 0.5, 5, r);
  CHECK(s.sizes.size() == 5);
  CHECK(s.min <= s.max);
}

TEST_CASE("instance file round trip") {
  const PlantedInstance inst = owf_evaluate({40, 0.3, 6}, 1234);
  std::stringstream buf;
  write_instance(buf, inst);
  const PlantedInstance back = read_instance(buf);
  CHECK(back.public_graph == inst.public_graph);
  CHECK(back.hidden_clique == inst.hidden_clique);
  CHECK(back.params == inst.params);
  CHECK(back.seed == inst.seed);
}

TEST_CASE("instance reader rejects inconsistent files") {
  const PlantedInstance inst = owf_evaluate({12, 0.5, 4}, 3);
  std::stringstream buf;
  write_instance(buf, inst);
  const std::string good = buf.str();

  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_instance(in);
    } catch (const FormatError&) {
      return true;
    }
    return false;
  };
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_FALSE(fails(good));
  CHECK(fails(replace("format-version = 1", "format-version = 2")));
  CHECK(fails(replace("k = 4", "k = 5")));
  CHECK(fails(replace("n = 12", "n = 13")));
  CHECK(fails(replace("[graph]", "[grph]")));
  // a hidden "clique" that is not one: an edgeless graph with the same ids
  CHECK(fails(replace(good.substr(good.find("p edge"), good.find("[hidden-clique]") - good.find("p edge")),
                      "p edge 12 0\n")));
}
