#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace enumbers {

/// Fixed-capacity set of vertex indices in [0, 128), stored as two 64-bit words.
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;

  /// The set {0, 1, ..., n-1}.
  static constexpr VertexSet prefix(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static constexpr VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  constexpr void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  constexpr int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Smallest member, or -1 when empty.
  constexpr int first() const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    }
    return -1;
  }

  /// Smallest member greater than v, or -1.
  constexpr int next(int v) const {
    ++v;
    if (v >= kCapacity) return -1;
    int w = v >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (word != 0) return w * 64 + std::countr_zero(word);
      if (++w == kWords) return -1;
      word = words_[w];
    }
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Arbitrary but fixed total order (word-wise).
  friend constexpr auto operator<=>(const VertexSet&, const VertexSet&) = default;

  class iterator {
   public:
    constexpr iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    constexpr int operator*() const { return v_; }
    constexpr iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_;
    int v_;
  };

  constexpr iterator begin() const { return {this, first()}; }
  constexpr iterator end() const { return {this, -1}; }

 private:
  static constexpr int kWords = kCapacity / 64;
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace enumbers
