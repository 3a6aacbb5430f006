#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

/// Layers of restricted sumsets: layers[k] = Gamma_k(A), the set of sums of
/// k pairwise-distinct elements of A.  layers[0] = {0} by convention.
struct SumsetTable {
  GroupSpec group;
  ElementSet source;
  std::uint32_t k_max = 0;
  std::vector<ElementSet> layers;

  const ElementSet& layer(std::uint32_t k) const {
    if (k > k_max) throw ConfigError("SumsetTable: layer index exceeds k_max");
    return layers[k];
  }
};

namespace detail {

inline void check_table_memory(std::uint64_t order, std::uint64_t layer_count) {
  const std::uint64_t words = (order + 63) / 64;
  const std::uint64_t bytes = words * 8 * (layer_count + 2);  // layers + scratch
  if (bytes > table_memory_cap())
    throw ConfigError("sumset table would exceed the memory cap (set SUMSETLAB_MEM_CAP)");
}

/// 0/1-knapsack layer update over the elements of A in ascending order.
/// Processing k descending keeps each element used at most once per sum.
inline void dp_build(const GroupSpec& G, const std::vector<std::uint64_t>& elems,
                     std::vector<ElementSet>& layers, ElementSet& scratch) {
  const std::uint32_t k_max = static_cast<std::uint32_t>(layers.size()) - 1;
  for (std::uint64_t e : elems) {
    for (std::uint32_t k = k_max; k >= 1; --k) {
      if (layers[k - 1].empty()) continue;
      scratch.clear();
      translate_or_into(G, layers[k - 1], e, scratch);
      layers[k] |= scratch;
    }
  }
}

}  // namespace detail

/// Exact DP over the source set.  Requires k_max <= |A|.
inline SumsetTable restricted_sumset_table(const GroupSpec& G, const ElementSet& A,
                                           std::uint32_t k_max) {
  if (A.universe() != G.order)
    throw ConfigError("restricted_sumset_table: set universe mismatch");
  if (k_max > A.count())
    throw ConfigError("restricted_sumset_table: k_max exceeds |A|");
  detail::check_table_memory(G.order, k_max + 1);
  SumsetTable t;
  t.group = G;
  t.source = A;
  t.k_max = k_max;
  t.layers.assign(k_max + 1, ElementSet(G.order));
  t.layers[0].set(0);
  ElementSet scratch(G.order);
  detail::dp_build(G, A.to_indices(), t.layers, scratch);
  return t;
}

/// True iff Gamma_k(A) = G for every k in [k_min, k_max].  Exploits
/// monotonicity (Gamma_k of a subset is contained in Gamma_k of the set) to
/// stop as soon as a prefix of A already covers at every length.
inline bool covers_all_lengths(const GroupSpec& G, const ElementSet& A, std::uint32_t k_min,
                               std::uint32_t k_max) {
  if (A.universe() != G.order) throw ConfigError("covers_all_lengths: set universe mismatch");
  if (k_min > k_max) throw ConfigError("covers_all_lengths: empty length range");
  if (k_max > A.count()) throw ConfigError("covers_all_lengths: k_max exceeds |A|");
  detail::check_table_memory(G.order, k_max + 1);
  std::vector<ElementSet> layers(k_max + 1, ElementSet(G.order));
  layers[0].set(0);
  ElementSet scratch(G.order);
  const auto elems = A.to_indices();
  std::uint64_t processed = 0;
  auto saturated = [&] {
    for (std::uint32_t k = k_min; k <= k_max; ++k)
      if (!layers[k].is_full()) return false;
    return true;
  };
  for (std::uint64_t e : elems) {
    for (std::uint32_t k = k_max; k >= 1; --k) {
      if (layers[k - 1].empty()) continue;
      scratch.clear();
      translate_or_into(G, layers[k - 1], e, scratch);
      layers[k] |= scratch;
    }
    if ((++processed & 63) == 0 && saturated()) return true;
  }
  return saturated();
}

/// Lexicographically least k-subset of A summing to target, or nullopt.
/// Rebuilds suffix availability on demand instead of storing parent links.
inline std::optional<std::vector<std::uint64_t>> dp_witness(const SumsetTable& t,
                                                            std::uint32_t k,
                                                            std::uint64_t target) {
  if (k > t.k_max) throw ConfigError("dp_witness: k exceeds table k_max");
  if (target >= t.group.order) throw ConfigError("dp_witness: target out of range");
  if (!t.layers[k].test(target)) return std::nullopt;

  const GroupSpec& G = t.group;
  const auto elems = t.source.to_indices();
  const std::uint64_t a = elems.size();

  // reachable(j, kk, tgt): does some kk-subset of elems[j..] sum to tgt?
  ElementSet scratch(G.order);
  auto reachable = [&](std::uint64_t j, std::uint32_t kk, std::uint64_t tgt) {
    if (kk == 0) return tgt == 0;
    if (a - j < kk) return false;
    std::vector<ElementSet> layers(kk + 1, ElementSet(G.order));
    layers[0].set(0);
    for (std::uint64_t i = j; i < a; ++i) {
      for (std::uint32_t kq = kk; kq >= 1; --kq) {
        if (layers[kq - 1].empty()) continue;
        scratch.clear();
        translate_or_into(G, layers[kq - 1], elems[i], scratch);
        layers[kq] |= scratch;
      }
      if (layers[kk].test(tgt)) return true;  // monotone: more elements only add sums
    }
    return layers[kk].test(tgt);
  };

  std::vector<std::uint64_t> witness;
  std::uint64_t tgt = target;
  std::uint32_t need = k;
  for (std::uint64_t j = 0; j < a && need > 0; ++j) {
    const std::uint64_t rem = G.sub(tgt, elems[j]);
    if (reachable(j + 1, need - 1, rem)) {
      witness.push_back(elems[j]);
      tgt = rem;
      --need;
    }
  }
  SUMSETLAB_CHECK(need == 0 && tgt == 0, "dp_witness: reconstruction failed");
  return witness;
}

/// Gamma_k(A) computed from the high layers: Gamma_k(A) = Abar - Gamma_{a-k}(A)
/// where Abar is the sum of all elements of A.
inline ElementSet complement_transform(const SumsetTable& t, std::uint32_t k) {
  const std::uint64_t a = t.source.count();
  if (k > a) throw ConfigError("complement_transform: k exceeds |A|");
  if (a - k > t.k_max)
    throw ConfigError("complement_transform: layer a-k not present in table");
  const std::uint64_t abar = set_sum(t.group, t.source);
  ElementSet reflected = negate_set(t.group, t.layers[a - k]);
  ElementSet out(t.group.order);
  translate_or_into(t.group, reflected, abar, out);
  return out;
}

// ---------------------------------------------------------------------------
// Multisets over Z_p and their fixed-length subset sums.

/// Multiset over Z_p given by multiplicities mult[v] for each residue v.
struct Multiset {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> mult;

  static Multiset from_values(std::uint64_t p, const std::vector<std::uint64_t>& values) {
    if (p < 2) throw ConfigError("Multiset: modulus must be >= 2");
    Multiset u;
    u.p = p;
    u.mult.assign(p, 0);
    for (auto v : values) {
      if (v >= p) throw ConfigError("Multiset: value out of range");
      ++u.mult[v];
    }
    return u;
  }

  static Multiset from_mult(std::uint64_t p, std::vector<std::uint64_t> m) {
    if (p < 2) throw ConfigError("Multiset: modulus must be >= 2");
    if (m.size() != p) throw ConfigError("Multiset: multiplicity vector size mismatch");
    Multiset u;
    u.p = p;
    u.mult = std::move(m);
    return u;
  }

  std::uint64_t total() const {
    std::uint64_t u = 0;
    for (auto m : mult) u += m;
    return u;
  }
};

/// Sigma_ell(U): all sums of exactly ell elements of U, respecting
/// multiplicities.  Sigma_0 = {0}.
inline ElementSet multiset_sigma(const Multiset& U, std::uint64_t ell) {
  const std::uint64_t u = U.total();
  if (ell > u) throw ConfigError("multiset_sigma: ell exceeds multiset size");
  // dp[c] = sums reachable with exactly c picks
  std::vector<ElementSet> dp(ell + 1, ElementSet(U.p));
  dp[0].set(0);
  for (std::uint64_t v = 0; v < U.p; ++v) {
    const std::uint64_t cap = std::min<std::uint64_t>(U.mult[v], ell);
    for (std::uint64_t t = 1; t <= cap; ++t) {
      // take t copies of v: process counts descending like 0/1 updates per copy
      for (std::uint64_t c = ell; c >= 1; --c) {
        ElementSet shifted(U.p);
        dp[c - 1].for_each([&](std::uint64_t s) { shifted.set((s + v) % U.p); });
        dp[c] |= shifted;
      }
    }
  }
  return dp[ell];
}

/// Lexicographically least pick-count vector (c_0, ..., c_{p-1}) with
/// sum(c) = ell, c_v <= mult[v], and sum(c_v * v) = s mod p; nullopt if none.
inline std::optional<std::vector<std::uint64_t>> sigma_witness(const Multiset& U,
                                                               std::uint64_t ell,
                                                               std::uint64_t s) {
  if (s >= U.p) throw ConfigError("sigma_witness: residue out of range");
  const std::uint64_t p = U.p;
  // feasible[v][c][r]: can residues v.. contribute c picks summing to r?
  // Computed as suffix DP, one layer per value, small sizes only.
  const std::uint64_t u = U.total();
  if (ell > u) return std::nullopt;
  std::vector<std::vector<std::vector<char>>> feasible(
      p + 1, std::vector<std::vector<char>>(ell + 1, std::vector<char>(p, 0)));
  feasible[p][0][0] = 1;
  for (std::uint64_t v = p; v-- > 0;) {
    for (std::uint64_t c = 0; c <= ell; ++c)
      for (std::uint64_t r = 0; r < p; ++r) {
        char ok = 0;
        const std::uint64_t cap = std::min<std::uint64_t>(U.mult[v], c);
        for (std::uint64_t t = 0; t <= cap && !ok; ++t) {
          const std::uint64_t r2 = (r + p * p - ((t * v) % p)) % p;
          ok = feasible[v + 1][c - t][r2];
        }
        feasible[v][c][r] = ok;
      }
  }
  if (!feasible[0][ell][s]) return std::nullopt;
  // greedy: maximize the count taken at the smallest value first gives the
  // lexicographically least vector read as (c_0, c_1, ...) descending? No:
  // lexicographic least vector means smallest c_0, so minimize at each step.
  std::vector<std::uint64_t> counts(p, 0);
  std::uint64_t c = ell, r = s;
  for (std::uint64_t v = 0; v < p; ++v) {
    const std::uint64_t cap = std::min<std::uint64_t>(U.mult[v], c);
    for (std::uint64_t t = 0; t <= cap; ++t) {
      const std::uint64_t r2 = (r + p * p - ((t * v) % p)) % p;
      if (feasible[v + 1][c - t][r2]) {
        counts[v] = t;
        c -= t;
        r = r2;
        break;
      }
    }
  }
  SUMSETLAB_CHECK(c == 0 && r == 0, "sigma_witness: reconstruction failed");
  return counts;
}

// ---------------------------------------------------------------------------
// Lower-bound formulas.

/// |Gamma_k(A)| >= min(p, k|A| - k^2 + 1) in Z_p.  Requires 1 <= k <= a <= p.
inline std::uint64_t dsh_bound(std::uint64_t p, std::uint64_t a, std::uint64_t k) {
  if (!is_prime_u64(p)) throw ConfigError("dsh_bound: p must be prime");
  if (k < 1 || k > a || a > p) throw ConfigError("dsh_bound: need 1 <= k <= a <= p");
  const std::uint64_t linear = k * a - k * k + 1;  // k <= a so nonnegative
  return std::min(p, linear);
}

/// If Sigma_ell(U) != Z_p then |Sigma_ell(U)| >= 1 - ell + sum_v min(ell, v_v).
inline std::int64_t dgm_bound(const Multiset& U, std::uint64_t ell) {
  if (!is_prime_u64(U.p)) throw ConfigError("dgm_bound: p must be prime");
  const std::uint64_t u = U.total();
  if (ell < 1 || ell > u) throw ConfigError("dgm_bound: need 1 <= ell <= u");
  std::int64_t s = 0;
  for (auto m : U.mult) s += static_cast<std::int64_t>(std::min(ell, m));
  return 1 - static_cast<std::int64_t>(ell) + s;
}

/// min over multiplicity vectors (v_i) with sum u, each v_i <= h, of
/// sum_i min(ell, v_i); equals q*ell + min(ell, r) with u = q*h + r.
inline std::uint64_t min_truncated_mass(std::uint64_t p, std::uint64_t h, std::uint64_t ell,
                                        std::uint64_t u) {
  if (p < 2 || h < 1) throw ConfigError("min_truncated_mass: need p >= 2, h >= 1");
  if (ell < 1 || ell > h) throw ConfigError("min_truncated_mass: need 1 <= ell <= h");
  if (u > (p - 1) * h) throw ConfigError("min_truncated_mass: u exceeds (p-1)h");
  const std::uint64_t q = u / h, r = u % h;
  return q * ell + std::min(ell, r);
}

}  // namespace sumsetlab
