#include "cliquebench/advisor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cliquebench/rng.hpp"

namespace cliquebench {
namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

bool near_half(double p, const AdvisorOptions& opts) { return std::abs(p - 0.5) <= opts.half_tolerance; }

BigInt at_least_two(BigInt n) { return n < 2 ? BigInt(2) : n; }

double log_inv(double x, double p) { return std::log(x) / std::log(1.0 / p); }

// log2 binomial(n, k) through lgamma, for arguments too large to expand.
double log2_binomial_approx(double n, double k) {
  if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
}

double clique_size_for(double n, double p) {
  return std::min(n, std::floor(2.0 * log_inv(n, p)));
}

// Exact evaluation is used while the binomial stays cheap to expand.
constexpr double kExactLimitN = 1e15;
constexpr double kExactLimitK = 20000.0;

}  // namespace

void AdvisorOptions::validate() const {
  if (!(q > 0.5 && q <= 1.0)) throw InputError("q must lie in (1/2, 1]");
  if (!(r_eps > 0.0)) throw InputError("r_eps must be positive");
  if (!(half_tolerance >= 0.0)) throw InputError("half_tolerance must be non-negative");
}

BigInt pow2_ceil(double x) {
  if (!(x >= 0.0)) throw InputError("pow2_ceil needs x >= 0");
  const double whole = std::floor(x);
  if (x - whole < 1e-12) return BigInt(1) << static_cast<unsigned>(whole);
  if (x < 52.0) return BigInt(static_cast<unsigned long long>(std::ceil(std::exp2(x))));
  // 2^x = 2^frac * 2^whole, keeping 52 bits of the fractional factor
  const double mantissa = std::exp2(x - whole + 52.0);
  BigInt out(static_cast<unsigned long long>(std::ceil(mantissa)));
  out <<= static_cast<unsigned>(whole - 52.0);
  return out;
}

double brute_force_log2_work(const BigInt& n, double p) {
  check_probability(p);
  const double nd = n.convert_to<double>();
  const double k = clique_size_for(nd, p);
  if (nd < kExactLimitN && k < kExactLimitK) {
    const auto ni = n.convert_to<unsigned long long>();
    return log2_big(binomial(static_cast<std::size_t>(ni), static_cast<std::size_t>(k)));
  }
  return log2_binomial_approx(nd, k);
}

BigInt brute_force_min_n(double lambda, double p) {
  check_probability(p);
  if (!(p > 0.0 && p < 1.0)) throw InputError("brute-force row needs 0 < p < 1");
  auto approx = [p](double n) { return log2_binomial_approx(n, clique_size_for(n, p)); };

  // The work is not monotone for small n (the clique size can swallow the
  // whole graph), so scan the small range one n at a time first.
  double found = -1.0;
  const double scan_limit = 1 << 16;
  for (double n = 2.0; n <= scan_limit; n += 1.0) {
    if (approx(n) >= lambda - 1e-6) {
      found = n;
      break;
    }
  }
  if (found < 0.0) {
    double lo = scan_limit;
    double hi = 2.0 * scan_limit;
    while (approx(hi) < lambda - 1e-6) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw InputError("lambda too large for the brute-force row");
    }
    while (hi - lo > std::max(1.0, hi * 1e-15)) {
      const double mid = std::floor(0.5 * (lo + hi));
      if (mid <= lo) break;
      if (approx(mid) >= lambda - 1e-6) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    found = hi;
  }

  BigInt n(static_cast<unsigned long long>(0));
  if (found < 1.8e19) {
    n = BigInt(static_cast<unsigned long long>(found));
  } else {
    return pow2_ceil(std::log2(found));
  }
  // settle the boundary exactly
  while (brute_force_log2_work(n, p) < lambda) ++n;
  while (n > 2 && brute_force_log2_work(n - 1, p) >= lambda) --n;
  return n;
}

std::vector<Recommendation> advise(double lambda, double p, const AdvisorOptions& opts) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("p must lie in (0,1)");
  if (!(lambda >= 1.0)) throw InputError("lambda must be >= 1");
  opts.validate();

  const BigInt sqrt_row = at_least_two(pow2_ceil(std::sqrt(lambda)));
  const BigInt q_row = at_least_two(pow2_ceil(std::pow(lambda, opts.q)));
  const std::string c1 = "; Omega-constant taken as 1";
  std::vector<Recommendation> rows;

  auto brute_row = [&](double pp) {
    Recommendation r;
    r.adversary = "Brute Force";
    r.min_n = at_least_two(brute_force_min_n(lambda, pp));
    r.p_constraint = "p ~ 1/2";
    r.k_constraint = "epsilon in [0,1]";
    r.formula = "smallest n with log2 C(n, floor(2 log_{1/p} n)) >= lambda, p=" + fmt(pp);
    return r;
  };
  auto metropolis_row = [&](double pp) {
    Recommendation r;
    r.adversary = "Metropolis (worst case)";
    r.min_n = at_least_two(pow2_ceil(std::sqrt(std::max(0.0, log_inv(lambda, pp)))));
    r.p_constraint = "p >= 1/2";
    r.k_constraint = "epsilon closer to 1";
    r.formula = "n >= 2^sqrt(log_{1/p} lambda) (as printed; the step from log n * log_{1/p} n "
                ">= lambda to log^2 n >= log_{1/p} lambda does not follow)" + c1;
    return r;
  };
  auto spectral_row = [&](double pp) {
    Recommendation r;
    r.adversary = "Spectral";
    if (near_half(pp, opts)) r.min_n = sqrt_row;
    r.p_constraint = "p >= 1/2";
    r.k_constraint = "-";
    r.formula = near_half(pp, opts) ? "n >= 2^sqrt(lambda), subset enumeration at p ~ 1/2" + c1
                                    : "no recommendation away from p ~ 1/2";
    return r;
  };
  auto dekel_row = [&]() {
    Recommendation r;
    r.adversary = "Dekel";
    r.min_n = sqrt_row;
    r.p_constraint = "p = 1/2";
    r.k_constraint = "-";
    r.formula = "n >= 2^sqrt(lambda) with p fixed at 1/2 (raising p only speeds the attack)" + c1;
    return r;
  };
  auto sos_row = [&](double pp) {
    Recommendation r;
    r.adversary = "SOS Relaxation";
    if (near_half(pp, opts)) {
      r.min_n = at_least_two(pow2_ceil(std::sqrt(lambda / opts.r_eps)));
    }
    r.p_constraint = "p >= 1/2";
    r.k_constraint = "-";
    r.formula = near_half(pp, opts) ? "n >= 2^sqrt(lambda / r_eps), r_eps=" + fmt(opts.r_eps)
                                    : "no recommendation away from p ~ 1/2";
    return r;
  };
  auto feige_row = [&](double pp) {
    Recommendation r;
    r.adversary = "Feige";
    if (near_half(pp, opts)) {
      r.min_n = sqrt_row;
      r.suggested_n = q_row;
    }
    r.p_constraint = "-";
    r.k_constraint = "-";
    r.formula = near_half(pp, opts)
                    ? "n = 2^(lambda^q) for any q > 1/2; min_n is the q -> 1/2 limit, suggested "
                      "q=" + fmt(opts.q)
                    : "no recommendation away from p ~ 1/2";
    return r;
  };

  rows.push_back(brute_row(p));
  {
    Recommendation dense;
    dense.adversary = "Brute Force (dense p)";
    const double pd = std::exp2(-2.0 * std::log2(lambda) / lambda);
    dense.min_n = at_least_two(BigInt(static_cast<unsigned long long>(std::ceil(lambda))));
    dense.p_constraint = "p = 2^(-2 log lambda / lambda) = " + fmt(pd);
    dense.k_constraint = "epsilon in [0,1]";
    dense.formula = "n = lambda at the dense edge probability";
    rows.push_back(dense);
  }
  Recommendation greedy;
  greedy.adversary = "Greedy";
  greedy.p_constraint = "p >= 1/2";
  greedy.k_constraint = "epsilon closer to 1";
  greedy.formula = "no bound on n; defeated by k well above log_{1/p} n";
  rows.push_back(greedy);
  rows.push_back(metropolis_row(p));
  rows.push_back(spectral_row(p));
  rows.push_back(dekel_row());
  rows.push_back(sos_row(p));
  rows.push_back(feige_row(p));

  // The combined row intersects every row's requirement at p = 1/2.
  const std::vector<Recommendation> at_half = {brute_row(0.5), metropolis_row(0.5),
                                               spectral_row(0.5), dekel_row(), sos_row(0.5),
                                               feige_row(0.5)};
  BigInt combined = 2;
  for (const auto& r : at_half) {
    if (r.min_n && *r.min_n > combined) combined = *r.min_n;
  }
  Recommendation all;
  all.adversary = "ALL";
  all.min_n = combined;
  all.suggested_n = std::max(combined, q_row);
  all.p_constraint = "1/2";
  all.k_constraint = "epsilon closer to 1";
  all.formula = "max of the rows at p = 1/2; suggested 2^(lambda^q), q=" + fmt(opts.q);
  rows.push_back(all);
  return rows;
}

BigInt storage_estimate(const BigInt& n, double) {
  if (n < 1) throw InputError("storage_estimate needs n >= 1");
  const BigInt bits = n * (n - 1) / 2;
  return (bits + 7) / 8;
}

}  // namespace cliquebench
