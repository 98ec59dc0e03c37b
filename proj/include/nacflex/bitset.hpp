#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace nacflex {

inline constexpr std::size_t kNoBit = std::numeric_limits<std::size_t>::max();

// Fixed-capacity bitset over Words*64 bits. The constructor argument is the
// logical size and is ignored; it keeps the interface shared with
// DynamicBitset so searches can be written once over either.
template <std::size_t Words>
class FixedBitset {
 public:
  static constexpr std::size_t capacity = Words * 64;

  explicit FixedBitset(std::size_t = 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  FixedBitset& operator|=(const FixedBitset& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  FixedBitset& operator&=(const FixedBitset& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  FixedBitset& operator-=(const FixedBitset& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend FixedBitset operator|(FixedBitset a, const FixedBitset& b) { return a |= b; }
  friend FixedBitset operator&(FixedBitset a, const FixedBitset& b) { return a &= b; }
  friend FixedBitset operator-(FixedBitset a, const FixedBitset& b) { return a -= b; }
  friend bool operator==(const FixedBitset&, const FixedBitset&) = default;

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool intersects(const FixedBitset& o) const {
    for (std::size_t k = 0; k < Words; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < Words; ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return kNoBit;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < Words; ++k)
      for (std::uint64_t x = w_[k]; x; x &= x - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }

 private:
  std::array<std::uint64_t, Words> w_{};
};

class DynamicBitset {
 public:
  explicit DynamicBitset(std::size_t n = 0) : w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  DynamicBitset& operator-=(const DynamicBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
  friend DynamicBitset operator-(DynamicBitset a, const DynamicBitset& b) { return a -= b; }
  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool intersects(const DynamicBitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return kNoBit;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      for (std::uint64_t x = w_[k]; x; x &= x - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Calls f with an empty bitset of the smallest type able to hold n bits.
template <class F>
decltype(auto) with_bitset_for(std::size_t n, F&& f) {
  if (n <= 64) return f(FixedBitset<1>(n));
  if (n <= 128) return f(FixedBitset<2>(n));
  if (n <= 256) return f(FixedBitset<4>(n));
  return f(DynamicBitset(n));
}

}  // namespace nacflex
