#pragma once

// Dense runtime-sized bitset. Rows of the adjacency structure are stored as
// these so that frontier expansion is word-parallel.

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bipgirth {

class DynBitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  DynBitset() = default;
  explicit DynBitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i / word_bits] |= Word{1} << (i % word_bits);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / word_bits] &= ~(Word{1} << (i % word_bits));
  }
  void set_all() {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  bool intersects(const DynBitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const DynBitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  DynBitset& operator|=(const DynBitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  /// this &= ~other
  DynBitset& subtract(const DynBitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / word_bits;
    Word w = words_[wi] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w) return std::min(size_, wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

 private:
  void trim() {
    if (size_ % word_bits && !words_.empty()) words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace bipgirth
