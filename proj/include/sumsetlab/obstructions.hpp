#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

/// Translate A so that the densest fiber of pi sits over 0.  Ties break to the
/// smallest residue; the shift is the smallest element of that fiber.
struct FiberDecomposition {
  std::uint64_t shift = 0;                 // g0 with A' = A - g0
  ElementSet translated;                   // A'
  std::vector<std::uint64_t> fiber_sizes;  // |A' meet pi^{-1}(r)| per residue r
};

inline FiberDecomposition normalize_translate(const GroupSpec& G, const QuotientMap& pi,
                                              const ElementSet& A) {
  if (A.universe() != G.order) throw ConfigError("normalize_translate: universe mismatch");
  if (pi.parent != G) throw ConfigError("normalize_translate: quotient is for another group");
  std::vector<std::uint64_t> before(pi.d, 0);
  A.for_each([&](std::uint64_t i) { ++before[pi(i)]; });
  std::uint64_t r0 = 0;
  for (std::uint64_t r = 1; r < pi.d; ++r)
    if (before[r] > before[r0]) r0 = r;
  std::uint64_t g0 = 0;
  if (r0 != 0) {
    // smallest element of the fiber pi^{-1}(r0)
    for (std::uint64_t i = 0; i < G.order; ++i)
      if (pi(i) == r0) {
        g0 = i;
        break;
      }
  }
  FiberDecomposition out;
  out.shift = g0;
  out.translated = translate(G, A, G.neg(g0));
  out.fiber_sizes.assign(pi.d, 0);
  out.translated.for_each([&](std::uint64_t i) { ++out.fiber_sizes[pi(i)]; });
  SUMSETLAB_CHECK(out.fiber_sizes[0] == before[r0], "normalize_translate: fiber count drifted");
  return out;
}

/// Structure scan for sets that may fail to cover at length 3: low density,
/// near-containment in an index-2 coset, near-containment in a union of two
/// cosets of one index-5 subgroup, or none of these with Gamma_3 full.
/// The alternatives are not mutually exclusive; every hit is reported.
struct CosetHit {
  ElementSet subgroup;
  ElementSet coset;
  std::uint64_t excess = 0;  // |A \ coset|
};

struct CosetPairHit {
  ElementSet subgroup;
  ElementSet coset_a;
  ElementSet coset_b;
  std::uint64_t excess = 0;  // |A \ (coset_a u coset_b)|
};

struct ObstructionReport {
  std::uint64_t t = 0;
  bool density_low = false;           // (i): 13|A| <= 5g, exact rational compare
  std::vector<CosetHit> index2;       // (ii)
  std::vector<CosetPairHit> index5;   // (iii)
  bool gamma3_full = false;           // (iv)
};

inline ObstructionReport obstruction_scan(const GroupSpec& G, const ElementSet& A,
                                          std::uint64_t t) {
  if (A.universe() != G.order) throw ConfigError("obstruction_scan: universe mismatch");
  ObstructionReport rep;
  rep.t = t;
  const std::uint64_t a = A.count();
  rep.density_low = 13 * a <= 5 * G.order;

  if (G.order % 2 == 0) {
    for (const auto& q : prime_index_subgroups(G, 2)) {
      const auto cosets = q.map.cosets();
      for (const auto& c : cosets) {
        const std::uint64_t excess = A.difference_count(c);
        if (excess <= t) {
          SUMSETLAB_CHECK(A.count() - A.intersection_count(c) == excess,
                          "obstruction_scan: excess mismatch");
          rep.index2.push_back(CosetHit{q.subgroup.members, c, excess});
        }
      }
    }
  }
  if (G.order % 5 == 0) {
    for (const auto& q : prime_index_subgroups(G, 5)) {
      const auto cosets = q.map.cosets();
      for (std::uint64_t i = 0; i < 5; ++i)
        for (std::uint64_t j = i + 1; j < 5; ++j) {
          ElementSet uni = cosets[i];
          uni |= cosets[j];
          const std::uint64_t excess = A.difference_count(uni);
          if (excess <= t)
            rep.index5.push_back(CosetPairHit{q.subgroup.members, cosets[i], cosets[j], excess});
        }
    }
  }
  if (a >= 3) {
    const auto table = restricted_sumset_table(G, A, 3);
    rep.gamma3_full = table.layers[3].is_full();
  }
  return rep;
}

/// Max |C1 meet C2| over pairs of distinct index-2 cosets; always <= g/4.
inline std::uint64_t coset_intersection_audit(const GroupSpec& G) {
  if (G.order % 2 != 0)
    throw ConfigError("coset_intersection_audit: group order must be even");
  std::vector<ElementSet> cosets;
  for (const auto& q : prime_index_subgroups(G, 2))
    for (auto& c : q.map.cosets()) cosets.push_back(c);
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      if (cosets[i] == cosets[j]) continue;
      best = std::max(best, cosets[i].intersection_count(cosets[j]));
    }
  SUMSETLAB_CHECK(best <= G.order / 4, "coset_intersection_audit: bound violated");
  return best;
}

/// Window coverage of Z_p, p in {3, 5}: the union of Sigma_len over
/// len in [ell, ell + w) covers Z_p, with w = 3 for p = 3 and w = 5 for p = 5.
/// Support must avoid 0.  Valid for 0 <= ell <= u - (w - 1).
struct ConsecutiveCoverWitness {
  std::uint64_t length = 0;               // chosen len within the window
  std::vector<std::uint64_t> counts;      // picks per residue value
};

struct ConsecutiveCoverReport {
  bool covered = false;
  std::vector<std::optional<ConsecutiveCoverWitness>> per_residue;
};

inline ConsecutiveCoverReport consecutive_cover(std::uint64_t p, const Multiset& U,
                                                std::uint64_t ell) {
  if (p != 3 && p != 5) throw ConfigError("consecutive_cover: p must be 3 or 5");
  if (U.p != p) throw ConfigError("consecutive_cover: multiset modulus mismatch");
  if (U.mult[0] != 0) throw ConfigError("consecutive_cover: support must avoid 0");
  const std::uint64_t w = (p == 3) ? 3 : 5;
  const std::uint64_t u = U.total();
  const std::uint64_t min_u = (p == 3) ? 2 : 4;
  if (u < min_u) throw ConfigError("consecutive_cover: multiset too small");
  if (ell + (w - 1) > u) throw ConfigError("consecutive_cover: window exceeds multiset size");

  ConsecutiveCoverReport rep;
  rep.per_residue.assign(p, std::nullopt);
  for (std::uint64_t s = 0; s < p; ++s) {
    for (std::uint64_t len = ell; len < ell + w; ++len) {
      auto counts = sigma_witness(U, len, s);
      if (counts) {
        rep.per_residue[s] = ConsecutiveCoverWitness{len, std::move(*counts)};
        break;
      }
    }
  }
  rep.covered = true;
  for (const auto& wit : rep.per_residue)
    if (!wit) rep.covered = false;
  return rep;
}

/// Saturation predicate: with p >= 7 prime, h >= 4, no zero values, every
/// multiplicity <= h and total mass u > (p-2)h/2, Sigma_ell(U) = Z_p for
/// 3 <= ell <= u - p + 1.  Returns whether the hypotheses hold and, if so,
/// whether fullness was confirmed by direct computation.
struct SigmaFullResult {
  bool hypotheses_met = false;
  bool full = false;
};

inline SigmaFullResult sigma_full_predicate(std::uint64_t p, std::uint64_t h,
                                            const Multiset& U, std::uint64_t ell) {
  if (!is_prime_u64(p) || p < 7) throw ConfigError("sigma_full_predicate: need prime p >= 7");
  if (h < 4) throw ConfigError("sigma_full_predicate: need h >= 4");
  if (U.p != p) throw ConfigError("sigma_full_predicate: multiset modulus mismatch");
  if (U.mult[0] != 0) throw ConfigError("sigma_full_predicate: support must avoid 0");
  for (auto m : U.mult)
    if (m > h) throw ConfigError("sigma_full_predicate: multiplicity cap exceeded");
  const std::uint64_t u = U.total();
  SigmaFullResult res;
  const bool mass_ok = 2 * u > (p - 2) * h;
  const bool range_ok = ell >= 3 && ell + p <= u + 1;
  res.hypotheses_met = mass_ok && range_ok;
  if (res.hypotheses_met) {
    res.full = multiset_sigma(U, ell).is_full();
    SUMSETLAB_CHECK(res.full, "sigma_full_predicate: saturation guarantee failed");
  }
  return res;
}

}  // namespace sumsetlab
