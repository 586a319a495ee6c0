#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliquebench/graph.hpp"

namespace cliquebench {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm
};

struct EigenOptions {
  double tol = 1e-8;              // residual bound, relative to max(1, |value|)
  std::size_t max_iters = 0;      // Lanczos steps per pair; 0 means 10n + 1000
};

/// y = A x for the 0/1 adjacency matrix.
void adjacency_multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y);

/// ||A v - value v||_2
double eigen_residual(const Graph& g, const EigenPair& pair);

/// The two largest eigenvalues of the adjacency matrix (signed order) with
/// orthonormal eigenvectors. Each pair comes from a Lanczos run with full
/// reorthogonalization; the second run works in the orthogonal complement of
/// the first vector, so a repeated top eigenvalue is reported twice. Vector
/// signs are fixed so the entry of largest magnitude is positive.
/// Throws InputError when n < 2 and ConvergenceError when the residual bound
/// is not met within the step limit.
std::pair<EigenPair, EigenPair> top_two_eigenpairs(const Graph& g, const EigenOptions& opts = {});

}  // namespace cliquebench
