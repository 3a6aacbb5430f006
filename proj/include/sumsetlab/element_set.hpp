#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

/// Dense bit-vector over element indices [0, n).  Set algebra is
/// group-agnostic; translation and reflection take the GroupSpec explicitly.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::uint64_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElementSet full(std::uint64_t universe) {
    ElementSet s(universe);
    for (auto& w : s.w_) w = ~0ull;
    s.trim();
    return s;
  }

  static ElementSet of(std::uint64_t universe, std::initializer_list<std::uint64_t> idxs) {
    ElementSet s(universe);
    for (auto i : idxs) s.set(i);
    return s;
  }

  static ElementSet from_indices(std::uint64_t universe, const std::vector<std::uint64_t>& idxs) {
    ElementSet s(universe);
    for (auto i : idxs) s.set(i);
    return s;
  }

  std::uint64_t universe() const { return n_; }
  std::size_t word_count() const { return w_.size(); }
  const std::vector<std::uint64_t>& words() const { return w_; }

  bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::uint64_t i) {
    if (i >= n_) throw ConfigError("ElementSet::set: index out of range");
    w_[i >> 6] |= 1ull << (i & 63);
  }

  void reset(std::uint64_t i) {
    if (i >= n_) throw ConfigError("ElementSet::reset: index out of range");
    w_[i >> 6] &= ~(1ull << (i & 63));
  }

  void flip(std::uint64_t i) {
    if (i >= n_) throw ConfigError("ElementSet::flip: index out of range");
    w_[i >> 6] ^= 1ull << (i & 63);
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : w_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == n_; }

  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  ElementSet& operator^=(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  /// this \ o
  ElementSet& subtract(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  ElementSet complement() const {
    ElementSet s(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  bool operator==(const ElementSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  bool subset_of(const ElementSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  std::uint64_t intersection_count(const ElementSet& o) const {
    check_same(o);
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::uint64_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  /// |this \ o|
  std::uint64_t difference_count(const ElementSet& o) const {
    check_same(o);
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::uint64_t>(std::popcount(w_[i] & ~o.w_[i]));
    return c;
  }

  std::optional<std::uint64_t> first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + static_cast<std::uint64_t>(std::countr_zero(w_[i]));
    return std::nullopt;
  }

  std::optional<std::uint64_t> first_missing() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t inv = ~w_[i];
      if ((i + 1) * 64 > n_) inv &= (n_ & 63) ? ((1ull << (n_ & 63)) - 1) : ~0ull;
      if (inv) {
        std::uint64_t idx = (i << 6) + static_cast<std::uint64_t>(std::countr_zero(inv));
        if (idx < n_) return idx;
      }
    }
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f((i << 6) + static_cast<std::uint64_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint64_t> to_indices() const {
    std::vector<std::uint64_t> v;
    v.reserve(count());
    for_each([&](std::uint64_t i) { v.push_back(i); });
    return v;
  }

  /// OR bits [src_lo, src_hi) of src into this starting at dst_lo.
  /// Pure word-level implementation; any bit alignment.
  void or_shifted_range(const ElementSet& src, std::uint64_t src_lo, std::uint64_t src_hi,
                        std::uint64_t dst_lo) {
    SUMSETLAB_CHECK(src_hi <= src.n_ && src_lo <= src_hi, "or_shifted_range: bad source range");
    SUMSETLAB_CHECK(dst_lo + (src_hi - src_lo) <= n_, "or_shifted_range: target overflow");
    std::uint64_t len = src_hi - src_lo;
    while (len > 0) {
      const std::uint64_t dw = dst_lo >> 6, doff = dst_lo & 63;
      std::uint64_t chunk = std::min<std::uint64_t>(64 - doff, len);
      const std::uint64_t sw = src_lo >> 6, soff = src_lo & 63;
      std::uint64_t bits = src.w_[sw] >> soff;
      if (soff != 0 && soff + chunk > 64) bits |= src.w_[sw + 1] << (64 - soff);
      if (chunk < 64) bits &= (1ull << chunk) - 1;
      w_[dw] |= bits << doff;
      src_lo += chunk;
      dst_lo += chunk;
      len -= chunk;
    }
  }

 private:
  void check_same(const ElementSet& o) const {
    if (n_ != o.n_) throw ConfigError("ElementSet: universe size mismatch");
  }

  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }

  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

namespace detail {

/// dst |= (src rotated by shift) for a cyclic group of order g.
inline void rotate_or_into(const ElementSet& src, std::uint64_t g, std::uint64_t shift,
                           ElementSet& dst) {
  shift %= g;
  if (shift == 0) {
    dst |= src;
    return;
  }
  dst.or_shifted_range(src, 0, g - shift, shift);
  dst.or_shifted_range(src, g - shift, g, 0);
}

/// Mixed-radix odometer walk maintaining i and i+e in lockstep.
template <class F>
inline void translated_walk(const GroupSpec& G, std::uint64_t e, F&& emit) {
  const std::size_t r = G.rank();
  std::vector<std::uint64_t> ic(r, 0);
  std::vector<std::uint64_t> tc = G.coords(e);
  std::uint64_t tgt = e;
  const std::uint64_t g = G.order;
  for (std::uint64_t i = 0;; ++i) {
    emit(i, tgt);
    if (i + 1 == g) break;
    std::size_t j = 0;
    for (;; ++j) {
      ++ic[j];
      ++tc[j];
      tgt += G.weights[j];
      if (tc[j] == G.factors[j]) {
        tc[j] = 0;
        tgt -= G.factors[j] * G.weights[j];
      }
      if (ic[j] < G.factors[j]) break;
      // carry: reset this axis in both walkers
      ic[j] = 0;
      std::uint64_t ej = (e / G.weights[j]) % G.factors[j];
      tgt -= tc[j] * G.weights[j];
      tc[j] = ej;
      tgt += tc[j] * G.weights[j];
    }
  }
}

}  // namespace detail

/// dst |= { x + e : x in src }.
inline void translate_or_into(const GroupSpec& G, const ElementSet& src, std::uint64_t e,
                              ElementSet& dst) {
  if (src.universe() != G.order || dst.universe() != G.order)
    throw ConfigError("translate: set universe does not match group order");
  if (G.rank() == 1) {
    detail::rotate_or_into(src, G.order, e, dst);
    return;
  }
  detail::translated_walk(G, e, [&](std::uint64_t i, std::uint64_t t) {
    if (src.test(i)) dst.set(t);
  });
}

inline ElementSet translate(const GroupSpec& G, const ElementSet& src, std::uint64_t e) {
  ElementSet dst(G.order);
  translate_or_into(G, src, e, dst);
  return dst;
}

/// { -x : x in src }.
inline ElementSet negate_set(const GroupSpec& G, const ElementSet& src) {
  if (src.universe() != G.order)
    throw ConfigError("negate_set: set universe does not match group order");
  ElementSet dst(G.order);
  src.for_each([&](std::uint64_t i) { dst.set(G.neg(i)); });
  return dst;
}

/// Sum of all elements of the set.
inline std::uint64_t set_sum(const GroupSpec& G, const ElementSet& s) {
  if (s.universe() != G.order)
    throw ConfigError("set_sum: set universe does not match group order");
  std::uint64_t acc = 0;
  s.for_each([&](std::uint64_t i) { acc = G.add(acc, i); });
  return acc;
}

}  // namespace sumsetlab
