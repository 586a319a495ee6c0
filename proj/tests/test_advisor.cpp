#include <doctest.h>

#include <sstream>

#include "cliquebench/advisor.hpp"
#include "cliquebench/records.hpp"

using namespace cliquebench;

namespace {

const Recommendation& row(const std::vector<Recommendation>& rows, const std::string& name) {
  for (const auto& r : rows) {
    if (r.adversary == name) return r;
  }
  FAIL("missing row " << name);
  return rows.front();
}

}  // namespace

TEST_CASE("lambda = 256 at p = 1/2") {
  const auto rows = advise(256, 0.5);
  CHECK(*row(rows, "ALL").min_n == 65536);
  CHECK(*row(rows, "Spectral").min_n == 65536);
  CHECK(*row(rows, "Dekel").min_n == 65536);
  CHECK(log2_big(binomial(65536, 32)) >= 256.0);

  const BigInt brute = *row(rows, "Brute Force").min_n;
  CHECK(brute_force_log2_work(brute, 0.5) >= 256.0);
  CHECK(brute_force_log2_work(brute - 1, 0.5) < 256.0);
  CHECK_FALSE(row(rows, "Greedy").min_n.has_value());

  BigInt largest = 2;
  for (const auto& r : rows) {
    if (r.adversary != "ALL" && r.adversary != "Brute Force (dense p)" && r.min_n) {
      largest = std::max(largest, *r.min_n);
    }
  }
  CHECK(*row(rows, "ALL").min_n == largest);
}

TEST_CASE("brute-force work uses exact binomials") {
  // n = 64 at p = 1/2: k = 12
  CHECK(brute_force_log2_work(64, 0.5) == doctest::Approx(log2_big(binomial(64, 12))));
}

TEST_CASE("rows are monotone in lambda") {
  const auto small = advise(4, 0.5);
  const auto large = advise(256, 0.5);
  REQUIRE(small.size() == large.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK(small[i].adversary == large[i].adversary);
    if (small[i].min_n && large[i].min_n) CHECK(*small[i].min_n <= *large[i].min_n);
  }
  BigInt previous = 0;
  for (double lambda : {1.0, 2.0, 8.0, 32.0, 64.0, 128.0, 256.0}) {
    const BigInt n = *row(advise(lambda, 0.5), "ALL").min_n;
    CHECK(n >= previous);
    previous = n;
  }
}

TEST_CASE("lambda = 1 floors every row at 2") {
  for (const auto& r : advise(1, 0.5)) {
    if (r.min_n) CHECK(*r.min_n >= 2);
  }
}

TEST_CASE("away from p = 1/2 the spectral-type rows give no recommendation") {
  const auto rows = advise(128, 0.8);
  CHECK_FALSE(row(rows, "Spectral").min_n.has_value());
  CHECK_FALSE(row(rows, "SOS Relaxation").min_n.has_value());
  CHECK(row(rows, "Brute Force").min_n.has_value());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(advise(256, 0.0), InputError);
  CHECK_THROWS_AS(advise(256, 1.0), InputError);
  CHECK_THROWS_AS(advise(0.5, 0.5), InputError);
  AdvisorOptions bad;
  bad.q = 0.4;
  CHECK_THROWS_AS(advise(256, 0.5, bad), InputError);
}

TEST_CASE("storage estimate") {
  CHECK(storage_estimate(2, 0.5) == 1);
  CHECK(storage_estimate(1000, 0.5) == 62438);
  CHECK(storage_estimate(65536, 0.5) == BigInt(2147450880) / 8);
  CHECK(storage_estimate(65536, 0.5) > 130'000'000);
  CHECK_THROWS_AS(storage_estimate(0, 0.5), InputError);
}

TEST_CASE("recommendation records and table") {
  const auto rows = advise(256, 0.5);
  const Record rec = to_record(row(rows, "ALL"));
  CHECK(rec["type"] == "recommendation");
  CHECK(rec["adversary"] == "ALL");
  CHECK(rec["min_n"] == "65536");
  CHECK(to_record(row(rows, "Greedy"))["min_n"].is_null());

  std::ostringstream table;
  write_advice_table(table, rows);
  const std::string text = table.str();
  CHECK(text.find("Adversary") != std::string::npos);
  CHECK(text.find("65536") != std::string::npos);
  CHECK(text.find(" \n") == std::string::npos);
}
