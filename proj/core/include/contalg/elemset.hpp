#ifndef CONTALG_ELEMSET_HPP
#define CONTALG_ELEMSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace contalg {

/// Fixed-universe bitset over element indices 0..n-1. Ideals, zero-divisor
/// sets and BFS frontiers are all instances of this; the universe is the
/// order of the ambient ring (or the vertex count of a graph).
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  /// this \ o
  ElemSet& subtract(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  /// Deterministic total order: cardinality first, then bitset value
  /// (most significant word down). Used to sort ideal enumerations.
  bool ordered_before(const ElemSet& o) const {
    std::size_t ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        unsigned b = static_cast<unsigned>(std::countr_zero(x));
        f(static_cast<std::uint32_t>(wi * 64 + b));
        x &= x - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace contalg

#endif
