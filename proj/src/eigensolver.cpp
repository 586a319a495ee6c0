#include "cliquebench/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace cliquebench {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// Fixed pseudo-random start vectors keep the solver deterministic without
// consuming any caller stream.
std::vector<double> start_vector(std::size_t n, std::uint64_t salt) {
  std::vector<double> x(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL * (salt + 1);
  for (auto& xi : x) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    xi = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
  }
  return x;
}

// Number of eigenvalues of the symmetric tridiagonal (a, b) strictly above x.
std::size_t count_above(const std::vector<double>& a, const std::vector<double>& b, double x) {
  std::size_t below_or_equal = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double off = i == 0 ? 0.0 : b[i - 1] * b[i - 1];
    q = a[i] - x - (i == 0 ? 0.0 : off / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1.0);
    if (q <= 0.0) ++below_or_equal;
  }
  return a.size() - below_or_equal;
}

// Largest eigenvalue of the tridiagonal by Sturm bisection.
double top_tridiagonal_value(const std::vector<double>& a, const std::vector<double>& b) {
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = (i > 0 ? std::abs(b[i - 1]) : 0.0) + (i + 1 < a.size() ? std::abs(b[i]) : 0.0);
    lo = std::min(lo, a[i] - r);
    hi = std::max(hi, a[i] + r);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_above(a, b, mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// Unit eigenvector of the tridiagonal for its top eigenvalue theta. The
// shift sits just above theta, so T - sigma I is negative definite and an
// unpivoted LDL^T solve is stable.
std::vector<double> top_tridiagonal_vector(const std::vector<double>& a,
                                           const std::vector<double>& b, double theta) {
  const std::size_t m = a.size();
  const double sigma = theta + 1e-10 * std::max(1.0, std::abs(theta));
  std::vector<double> d(m);
  std::vector<double> l(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    d[i] = a[i] - sigma;
    if (i > 0) {
      l[i] = b[i - 1] / d[i - 1];
      d[i] -= l[i] * b[i - 1];
    }
    if (d[i] > -1e-300) d[i] = -1e-300;
  }
  std::vector<double> y(m, 1.0);
  for (int pass = 0; pass < 3; ++pass) {
    for (std::size_t i = 1; i < m; ++i) y[i] -= l[i] * y[i - 1];
    for (std::size_t i = 0; i < m; ++i) y[i] /= d[i];
    for (std::size_t i = m - 1; i-- > 0;) y[i] -= l[i + 1] * y[i + 1];
    const double s = norm(y);
    for (auto& yi : y) yi /= s;
  }
  return y;
}

void fix_sign(std::vector<double>& v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
  }
  if (v[arg] < 0.0) {
    for (auto& x : v) x = -x;
  }
}

// Top eigenpair of A restricted to the orthogonal complement of `locked`.
EigenPair lanczos_top(const Graph& g, const std::vector<std::vector<double>>& locked, double tol,
                      std::size_t max_steps, std::uint64_t salt) {
  const std::size_t n = g.n();
  const std::size_t limit = std::min(n - locked.size(), max_steps);
  std::vector<std::vector<double>> basis;
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples basis[j] and basis[j + 1]

  auto orthogonalize = [&](std::vector<double>& w) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : locked) axpy(-dot(u, w), u, w);
      for (const auto& q : basis) axpy(-dot(q, w), q, w);
    }
  };
  // A fresh unit direction orthogonal to everything seen; false when the
  // available space is exhausted.
  auto fresh_direction = [&](std::vector<double>& out) {
    for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
      out = start_vector(n, salt * 1000 + basis.size() * 7 + attempt);
      const double before = norm(out);
      orthogonalize(out);
      const double after = norm(out);
      if (after > 1e-8 * before) {
        for (auto& x : out) x /= after;
        return true;
      }
    }
    return false;
  };

  std::vector<double> q;
  if (!fresh_direction(q)) throw ConvergenceError("no start direction available");
  std::vector<double> w(n);
  double anorm = 1.0;
  EigenPair best;
  double best_residual = std::numeric_limits<double>::infinity();

  while (true) {
    basis.push_back(q);
    const std::size_t j = basis.size() - 1;
    adjacency_multiply(g, basis[j], w);
    const double aj = dot(basis[j], w);
    alpha.push_back(aj);
    axpy(-aj, basis[j], w);
    if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
    orthogonalize(w);
    double bj = norm(w);
    anorm = std::max({anorm, std::abs(aj) + bj + (j > 0 ? beta[j - 1] : 0.0)});
    const bool exhausted_steps = basis.size() >= limit;
    bool breakdown = bj <= 1e-12 * anorm;

    const double theta = top_tridiagonal_value(alpha, beta);
    const std::vector<double> z = top_tridiagonal_vector(alpha, beta, theta);
    const double estimate = (breakdown ? 0.0 : bj) * std::abs(z.back());
    const double bound = tol * std::max(1.0, std::abs(theta));

    if (estimate <= 0.5 * bound || exhausted_steps || breakdown) {
      EigenPair pair;
      pair.value = theta;
      pair.vector.assign(n, 0.0);
      for (std::size_t i = 0; i < basis.size(); ++i) axpy(z[i], basis[i], pair.vector);
      for (const auto& u : locked) axpy(-dot(u, pair.vector), u, pair.vector);
      const double s = norm(pair.vector);
      for (auto& x : pair.vector) x /= s;
      const double residual = eigen_residual(g, pair);
      if (residual < best_residual) {
        best_residual = residual;
        best = pair;
      }
      if (residual <= bound) return best;
      if (exhausted_steps) break;
    }
    if (breakdown) {
      if (basis.size() >= n - locked.size() || !fresh_direction(q)) break;
      beta.push_back(0.0);
      continue;
    }
    beta.push_back(bj);
    q = w;
    for (auto& x : q) x /= bj;
  }
  throw ConvergenceError("eigensolver did not reach residual " + std::to_string(tol) +
                         " (best " + std::to_string(best_residual) + ") after " +
                         std::to_string(basis.size()) + " Lanczos steps");
}

}  // namespace

void adjacency_multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  const std::size_t n = g.n();
  y.assign(n, 0.0);
  for (Vertex u = 0; u < n; ++u) {
    const auto row = g.row(u);
    double s = 0.0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      Word bits = row[w];
      while (bits != 0) {
        s += x[w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
    y[u] = s;
  }
}

double eigen_residual(const Graph& g, const EigenPair& pair) {
  std::vector<double> y;
  adjacency_multiply(g, pair.vector, y);
  axpy(-pair.value, pair.vector, y);
  return norm(y);
}

std::pair<EigenPair, EigenPair> top_two_eigenpairs(const Graph& g, const EigenOptions& opts) {
  const std::size_t n = g.n();
  if (n < 2) throw InputError("top_two_eigenpairs needs n >= 2");
  if (!(opts.tol > 0.0)) throw InputError("eigen tolerance must be positive");
  const std::size_t steps = opts.max_iters == 0 ? 10 * n + 1000 : opts.max_iters;

  // The second pair is computed against the first vector, so any error in
  // it leaks into the second residual; solve the first one more tightly.
  EigenPair first = lanczos_top(g, {}, opts.tol * 1e-2, steps, 1);
  fix_sign(first.vector);
  EigenPair second = lanczos_top(g, {first.vector}, opts.tol, steps, 2);
  fix_sign(second.vector);
  const double bound = opts.tol * std::max(1.0, std::abs(second.value));
  if (eigen_residual(g, second) > bound) {
    throw ConvergenceError("second eigenpair residual above tolerance");
  }
  return {std::move(first), std::move(second)};
}

}  // namespace cliquebench
