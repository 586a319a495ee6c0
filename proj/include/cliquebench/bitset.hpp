#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cliquebench {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-size packed bit vector. Graph rows and vertex masks share this
/// word layout so intersections run a word at a time.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool value = false);

  static Bitset from_words(std::size_t size, std::span<const Word> words);

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  /// Index of the lowest set bit at or after `from`; size() when none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }
  /// Index of the `rank`-th set bit (0-based). Requires rank < count().
  std::size_t select(std::size_t rank) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  /// this &= ~other
  Bitset& subtract(const Bitset& other);
  Bitset& and_words(std::span<const Word> other);
  /// Clears every bit with index <= i.
  void clear_through(std::size_t i);

  std::size_t count_and(std::span<const Word> other) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

}  // namespace cliquebench
