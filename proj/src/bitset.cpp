#include "cliquebench/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace cliquebench {

Bitset::Bitset(std::size_t size, bool value)
    : size_(size), words_(words_for(size), value ? ~Word{0} : Word{0}) {
  trim();
}

Bitset Bitset::from_words(std::size_t size, std::span<const Word> words) {
  Bitset out(size);
  std::copy_n(words.begin(), std::min(words.size(), out.words_.size()), out.words_.begin());
  out.trim();
  return out;
}

void Bitset::trim() {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Bitset::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word bits = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

std::size_t Bitset::select(std::size_t rank) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const auto c = static_cast<std::size_t>(std::popcount(words_[w]));
    if (rank < c) {
      Word bits = words_[w];
      for (std::size_t r = 0; r < rank; ++r) bits &= bits - 1;
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    rank -= c;
  }
  assert(false && "select rank out of range");
  return size_;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bitset& Bitset::and_words(std::span<const Word> other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
  return *this;
}

void Bitset::clear_through(std::size_t i) {
  if (size_ == 0) return;
  if (i >= size_ - 1) {
    std::fill(words_.begin(), words_.end(), Word{0});
    return;
  }
  const std::size_t w = i / kWordBits;
  std::fill(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(w), Word{0});
  const std::size_t bit = i % kWordBits;
  words_[w] &= bit + 1 == kWordBits ? Word{0} : (~Word{0} << (bit + 1));
}

std::size_t Bitset::count_and(std::span<const Word> other) const {
  return popcount_and(words_, other);
}

}  // namespace cliquebench
