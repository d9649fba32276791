#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dicol {

// Flat bitset over a universe fixed at construction time. Word-parallel
// operations are all this project needs; no dynamic growth.
class DynamicBitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

  void clear() { std::fill(words_.begin(), words_.end(), std::uint64_t{0}); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const DynamicBitset& o) const {
    const std::size_t k = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < k; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  DynamicBitset& operator&=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= (i < o.words_.size() ? o.words_[i] : 0);
    return *this;
  }

  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (i < o.words_.size()) words_[i] |= o.words_[i];
    return *this;
  }

  bool operator==(const DynamicBitset&) const = default;

  // First set position, or npos.
  std::size_t find_first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
  }

  // First set position strictly greater than i, or npos.
  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= n_) return npos;
    std::size_t w = i >> 6;
    std::uint64_t masked = words_[w] & (~std::uint64_t{0} << (i & 63));
    if (masked) return (w << 6) + static_cast<std::size_t>(std::countr_zero(masked));
    for (++w; w < words_.size(); ++w)
      if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t v = words_[w];
      while (v) {
        const int b = std::countr_zero(v);
        f((w << 6) + static_cast<std::size_t>(b));
        v &= v - 1;
      }
    }
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dicol
