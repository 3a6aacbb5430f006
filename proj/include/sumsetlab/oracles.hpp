#pragma once

// Brute-force reference implementations used by the verification suites.
// Everything here is deliberately independent of the engine's DP and search
// code paths: plain subset enumeration and direct definitions only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sumsetlab/codes.hpp"
#include "sumsetlab/common.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab::oracle {

/// Gamma_k(A) by direct enumeration of all k-subsets.
inline ElementSet brute_gamma(const GroupSpec& G, const std::vector<std::uint64_t>& elems,
                              std::uint32_t k) {
  ElementSet out(G.order);
  if (k == 0) {
    out.set(0);
    return out;
  }
  if (k > elems.size()) return out;
  std::vector<std::uint32_t> pick;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t sum) -> void {
    if (pick.size() == k) {
      out.set(sum);
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= elems.size(); ++i) {
      pick.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1, G.add(sum, elems[i]));
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// All layers Gamma_0..Gamma_{|A|} in one include/exclude pass over the 2^a
/// subsets.  A dense add table keeps non-cyclic arithmetic cheap.
inline std::vector<ElementSet> brute_gamma_all(const GroupSpec& G,
                                               const std::vector<std::uint64_t>& elems) {
  const std::uint64_t g = G.order;
  if (g > 4096) throw ConfigError("brute_gamma_all: order too large for the add table");
  std::vector<std::uint16_t> add_tab(g * g);
  for (std::uint64_t a = 0; a < g; ++a)
    for (std::uint64_t b = 0; b < g; ++b)
      add_tab[a * g + b] = static_cast<std::uint16_t>(G.add(a, b));
  std::vector<ElementSet> layers(elems.size() + 1, ElementSet(g));
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t count, std::uint64_t sum) -> void {
    if (i == elems.size()) {
      layers[count].set(sum);
      return;
    }
    self(self, i + 1, count, sum);
    self(self, i + 1, count + 1, add_tab[sum * g + elems[i]]);
  };
  rec(rec, 0, 0, 0);
  return layers;
}

/// Sigma_ell(U) by enumerating ell-subsets of the expanded value list.
inline ElementSet brute_sigma(const Multiset& U, std::uint32_t ell) {
  const std::uint64_t p = U.p;
  std::vector<std::uint64_t> vals;
  for (std::uint64_t v = 0; v < p; ++v)
    for (std::uint32_t c = 0; c < U.mult[v]; ++c) vals.push_back(v);
  ElementSet out(p);
  if (ell > vals.size()) return out;
  if (ell == 0) {
    out.set(0);
    return out;
  }
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start, std::uint64_t sum) -> void {
    if (pick.size() == ell) {
      out.set(sum);
      return;
    }
    for (std::size_t i = start; i + (ell - pick.size()) <= vals.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1, (sum + vals[i]) % p);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// mu_k(G) from the definition: one more than the largest size (>= k) of a
/// set whose Gamma_k misses something.  Full 2^g subset scan; g <= ~16.
inline std::uint64_t brute_mu(const GroupSpec& G, std::uint32_t k) {
  const std::uint64_t g = G.order;
  if (g > 20) throw ConfigError("brute_mu: order too large for the 2^g scan");
  std::uint64_t max_noncover = k == 0 ? 0 : k - 1;  // sizes below k never count
  for (std::uint64_t mask = 1; mask < (1ull << g); ++mask) {
    const std::uint32_t sz = static_cast<std::uint32_t>(__builtin_popcountll(mask));
    if (sz < k || sz <= max_noncover) continue;
    std::vector<std::uint64_t> elems;
    for (std::uint64_t i = 0; i < g; ++i)
      if (mask & (1ull << i)) elems.push_back(i);
    if (brute_gamma(G, elems, k).count() != g) max_noncover = sz;
  }
  return max_noncover + 1;
}

/// Invariant factors by pairwise gcd/lcm merging until divisibility holds.
inline std::vector<std::uint64_t> smith_invariant_factors(std::vector<std::uint64_t> f) {
  f.erase(std::remove(f.begin(), f.end(), std::uint64_t{1}), f.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (f[j] % f[i] == 0) continue;
        const std::uint64_t g = std::gcd(f[i], f[j]);
        const std::uint64_t l = std::lcm(f[i], f[j]);
        f[i] = g;
        f[j] = l;
        changed = true;
      }
    f.erase(std::remove(f.begin(), f.end(), std::uint64_t{1}), f.end());
  }
  std::sort(f.begin(), f.end());
  return f;
}

/// All subgroups of G of a given order, by closed-subset scan.  g <= 16.
inline std::vector<ElementSet> brute_subgroups_of_order(const GroupSpec& G, std::uint64_t m) {
  const std::uint64_t g = G.order;
  if (g > 16) throw ConfigError("brute_subgroups_of_order: order too large");
  if (m == 0 || g % m != 0) throw ConfigError("brute_subgroups_of_order: m must divide g");
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << g); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != m) continue;
    std::vector<std::uint64_t> elems;
    for (std::uint64_t i = 0; i < g; ++i)
      if (mask & (1ull << i)) elems.push_back(i);
    bool closed = true;
    for (std::uint64_t x : elems) {
      for (std::uint64_t y : elems)
        if (!(mask & (1ull << G.add(x, y)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    ElementSet s(g);
    for (std::uint64_t e : elems) s.set(e);
    out.push_back(std::move(s));
  }
  return out;
}

/// Point count by scanning the full (x, y) grid against the curve equation.
inline std::uint64_t brute_curve_count(const Curve& c) {
  std::uint64_t n = 1;  // infinity
  for (std::uint64_t x = 0; x < c.p; ++x)
    for (std::uint64_t y = 0; y < c.p; ++y)
      if (on_curve(c, CurvePoint::affine(x, y))) ++n;
  return n;
}

/// Minimum distance by enumerating all p^k codewords.  The message odometer
/// updates the codeword incrementally: bumping digit d adds row d once, and a
/// wrap from p-1 to 0 is the same addition mod p followed by a carry.
inline std::uint32_t brute_min_distance(const CodeInstance& code, std::uint64_t cap = 100000) {
  const std::uint64_t p = code.curve.p;
  const std::uint32_t k = code.k, n = code.n();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (total > cap / p) throw ConfigError("brute_min_distance: p^k exceeds enumeration cap");
    total *= p;
  }
  std::vector<std::uint64_t> msg(k, 0);
  std::vector<std::uint64_t> cw(n, 0);
  std::uint32_t best = n + 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::uint32_t d = 0;
    while (true) {
      for (std::uint32_t c = 0; c < n; ++c) cw[c] = fp::add(cw[c], code.gen.at(d, c), p);
      msg[d] = (msg[d] + 1) % p;
      if (msg[d] != 0) break;
      ++d;
    }
    std::uint32_t w = 0;
    for (std::uint32_t c = 0; c < n; ++c) w += (cw[c] != 0);
    best = std::min(best, w);
  }
  SUMSETLAB_CHECK(best <= n, "no nonzero codeword found");
  return best;
}

inline bool is_mds_enum(const CodeInstance& code, std::uint64_t cap = 100000) {
  return brute_min_distance(code, cap) == code.n() - code.k + 1;
}

}  // namespace sumsetlab::oracle
