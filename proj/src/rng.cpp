#include "cliquebench/rng.hpp"

#include <cmath>
#include <unordered_set>
#include <vector>

namespace cliquebench {

std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = root ^ (h + 0x9e3779b97f4a7c15ULL + (root << 6) + (root >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("probability must lie in [0, 1], got " + std::to_string(p));
  }
}

__extension__ using u128 = unsigned __int128;

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw InputError("next_below requires a positive bound");
  // Lemire's nearly-divisionless rejection method.
  u128 m = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

bool Rng::next_bernoulli(double p) {
  check_probability(p);
  return next_unit() < p;
}

VertexSet sample_subset(Rng& rng, std::size_t n, std::size_t k) {
  if (k > n) {
    throw InputError("cannot sample " + std::to_string(k) + " of " + std::to_string(n) +
                     " vertices");
  }
  // Floyd's algorithm: k draws, each subset equally likely.
  std::vector<Vertex> chosen;
  chosen.reserve(k);
  std::unordered_set<Vertex> seen;
  seen.reserve(k * 2);
  for (std::size_t j = n - k; j < n; ++j) {
    auto t = static_cast<Vertex>(rng.next_below(j + 1));
    if (!seen.insert(t).second) {
      t = static_cast<Vertex>(j);
      seen.insert(t);
    }
    chosen.push_back(t);
  }
  return VertexSet::from_unsorted(std::move(chosen));
}

}  // namespace cliquebench
