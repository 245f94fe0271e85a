#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace commgraph {

// Fixed-size dynamic bitset; the word layout matches UndirectedGraph rows so
// rows can be combined with sets directly.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset from_words(std::size_t n, std::span<const std::uint64_t> words) {
    Bitset b(n);
    for (std::size_t i = 0; i < b.w_.size(); ++i) b.w_[i] = words[i];
    return b;
  }

  std::size_t size() const noexcept { return n_; }
  std::span<const std::uint64_t> words() const noexcept { return w_; }
  std::span<std::uint64_t> words() noexcept { return w_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& x : w_) x = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool none() const {
    for (auto x : w_) {
      if (x) return false;
    }
    return true;
  }

  // Lowest set index >= from, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t x = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (x) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(x));
      if (++wi == w_.size()) return n_;
      x = w_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      for (std::uint64_t x = w_[wi]; x; x &= x - 1) f((wi << 6) + std::countr_zero(x));
    }
  }

  Bitset& operator&=(std::span<const std::uint64_t> o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o[i];
    return *this;
  }
  Bitset& operator|=(std::span<const std::uint64_t> o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o[i];
    return *this;
  }
  Bitset& and_not(std::span<const std::uint64_t> o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) { return *this &= o.words(); }
  Bitset& operator|=(const Bitset& o) { return *this |= o.words(); }
  Bitset& and_not(const Bitset& o) { return and_not(o.words()); }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline bool intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

// a is a subset of b.
inline bool subset_of(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

}  // namespace commgraph
