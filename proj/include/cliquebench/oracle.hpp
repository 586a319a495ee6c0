#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquebench/budget.hpp"
#include "cliquebench/graph.hpp"

namespace cliquebench {

using BigInt = boost::multiprecision::cpp_int;

/// Maximum-cardinality clique by branch and bound with a greedy-coloring
/// bound. Among maximum cliques the lexicographically smallest is returned.
VertexSet max_clique_exact(const Graph& g);

/// Size of a maximum clique (no tie-breaking pass).
std::size_t clique_number(const Graph& g);

/// Some clique of exactly `size` vertices inside `candidates`, if one exists.
std::optional<VertexSet> find_clique_of_size(const Graph& g, const Bitset& candidates,
                                             std::size_t size);

struct BruteForceResult {
  std::optional<VertexSet> clique;
  std::uint64_t examined = 0;  // partial subsets visited
  bool budget_exceeded = false;
};

/// Walks k-subsets in lexicographic order, abandoning a prefix as soon as it
/// stops being a clique, and returns the first k-clique. `budget` caps the
/// number of prefixes visited. Throws InputError when k > n.
BruteForceResult brute_force_attack(const Graph& g, std::size_t k, std::uint64_t budget,
                                    const Deadline& deadline = {});

/// binomial(n, k): the number of k-subsets an exhaustive search enumerates.
BigInt count_steps_estimate(std::size_t n, double p, std::size_t k);
BigInt binomial(std::size_t n, std::size_t k);
/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& value);

}  // namespace cliquebench
