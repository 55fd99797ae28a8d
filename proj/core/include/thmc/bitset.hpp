#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace thmc {

// Dynamically sized bitset with the handful of operations the face and
// double-description code needs.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const DynBitset& o) const noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  DynBitset& operator&=(const DynBitset& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) noexcept { return a &= b; }
  friend bool operator==(const DynBitset&, const DynBitset&) = default;
  friend auto operator<=>(const DynBitset& a, const DynBitset& b) noexcept { return a.w_ <=> b.w_; }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (auto w : w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

}  // namespace thmc
