#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquebench/oracle.hpp"

namespace cliquebench {

struct AdvisorOptions {
  double q = 0.6;               // exponent of the 2^(lambda^q) suggestion, in (1/2, 1]
  double r_eps = 1.0;           // SOS running-time constant
  double half_tolerance = 0.05;  // |p - 1/2| within this counts as p ~ 1/2

  void validate() const;
};

struct Recommendation {
  std::string adversary;
  std::optional<BigInt> min_n;        // empty: no recommendation
  std::optional<BigInt> suggested_n;  // a comfortable choice above min_n, when one is given
  std::string p_constraint;
  std::string k_constraint;
  std::string formula;
};

/// ceil(2^x) for x >= 0.
BigInt pow2_ceil(double x);

/// log2 binomial(n, floor(2 log_{1/p} n)), the size clamped to n.
double brute_force_log2_work(const BigInt& n, double p);

/// Smallest n >= 2 whose brute-force work reaches 2^lambda.
BigInt brute_force_min_n(double lambda, double p);

/// One row per adversary, then the combined row, whose min_n is the largest
/// row minimum evaluated at p = 1/2. Every min_n is at least 2. Throws
/// InputError when p is outside (0,1) or lambda < 1. Asymptotic constants
/// are taken as 1.
std::vector<Recommendation> advise(double lambda, double p, const AdvisorOptions& opts = {});

/// Bytes for one bit per vertex pair: ceil(n(n-1)/2 / 8).
BigInt storage_estimate(const BigInt& n, double p);

}  // namespace cliquebench
