#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace cliquebench {

/// Cooperative wall-clock budget. Long-running loops poll expired() every
/// few thousand units of work and return their best result so far.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  /// Never expires.
  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : at_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)), bounded_(true) {}

  static Deadline unlimited() { return Deadline(); }

  bool bounded() const { return bounded_; }
  bool expired() const { return bounded_ && Clock::now() >= at_; }

 private:
  Clock::time_point at_{};
  bool bounded_ = false;
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

}  // namespace cliquebench
