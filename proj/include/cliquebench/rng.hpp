#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "cliquebench/graph.hpp"

namespace cliquebench {

/// Seed of a named child stream: splitmix64 finalizer over (root, FNV-1a(label)).
std::uint64_t derive_seed(std::uint64_t root, std::string_view label);

/// Seedable, reproducible randomness. The engine is std::mt19937_64, whose
/// output sequence the standard pins exactly; every distribution on top of
/// it is implemented here so results do not depend on the standard library
/// vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Independent stream keyed by (seed, label). Does not advance this stream.
  Rng child(std::string_view label) const { return Rng(derive_seed(seed_, label)); }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);
  /// True with probability p; throws InputError unless 0 <= p <= 1.
  bool next_bernoulli(double p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Uniformly random k-subset of {0..n-1}; throws InputError when k > n.
VertexSet sample_subset(Rng& rng, std::size_t n, std::size_t k);

void check_probability(double p);

}  // namespace cliquebench
