#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

/// Disjoint pairs of distinct elements of A all summing to the same beta.
struct PairFamily {
  std::uint64_t beta = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  std::uint64_t n_pair() const { return pairs.size(); }
};

/// Pick beta maximizing the number of ordered representations beta = x + y
/// with x, y in A, then pair up the involution x <-> beta - x.  In odd order
/// the involution has at most one fixed point, so n_pair >= ceil((n_beta-1)/2)
/// >= ceil((a^2/g - 1)/2).
inline PairFamily best_pair_sum(const GroupSpec& G, const ElementSet& A) {
  if (G.order % 2 == 0) throw ConfigError("best_pair_sum: group order must be odd");
  if (A.universe() != G.order) throw ConfigError("best_pair_sum: universe mismatch");
  if (A.count() < 2) throw ConfigError("best_pair_sum: need |A| >= 2");
  const auto elems = A.to_indices();
  std::vector<std::uint32_t> reps(G.order, 0);
  for (auto x : elems)
    for (auto y : elems) ++reps[G.add(x, y)];
  std::uint64_t beta = 0;
  for (std::uint64_t b = 1; b < G.order; ++b)
    if (reps[b] > reps[beta]) beta = b;

  PairFamily fam;
  fam.beta = beta;
  for (auto x : elems) {
    const std::uint64_t y = G.sub(beta, x);
    if (y > x && A.test(y)) fam.pairs.emplace_back(x, y);
  }
  const std::uint64_t n_beta = reps[beta];
  SUMSETLAB_CHECK(2 * fam.pairs.size() + 1 >= n_beta, "pair extraction lost pairs");
  return fam;
}

/// Constructive representation result: either a validated witness (k distinct
/// elements of A summing to target) or the name of the hypothesis that failed.
struct RepresentResult {
  bool ok = false;
  std::vector<std::uint64_t> witness;
  std::string failed_hypothesis;

  static RepresentResult fail(std::string hyp) {
    RepresentResult r;
    r.failed_hypothesis = std::move(hyp);
    return r;
  }
};

namespace detail {

inline void validate_witness(const GroupSpec& G, const ElementSet& A, std::uint64_t k,
                             std::uint64_t target, std::vector<std::uint64_t>& w) {
  std::sort(w.begin(), w.end());
  SUMSETLAB_CHECK(w.size() == k, "witness has wrong length");
  SUMSETLAB_CHECK(std::adjacent_find(w.begin(), w.end()) == w.end(),
                  "witness elements not distinct");
  std::uint64_t s = 0;
  for (auto e : w) {
    SUMSETLAB_CHECK(A.test(e), "witness element outside A");
    s = G.add(s, e);
  }
  SUMSETLAB_CHECK(s == target, "witness sum mismatch");
}

/// Enumerate m-subsets of elems (ascending index order) summing to target,
/// lexicographically, invoking visit(subset) until it accepts one or
/// max_tries candidates were offered.
template <class Visit>
inline void find_subset_sums(const GroupSpec& G, const std::vector<std::uint64_t>& elems,
                             std::uint32_t m, std::uint64_t target, Visit&& visit,
                             std::uint32_t max_tries) {
  std::vector<std::uint64_t> cur;
  std::uint32_t tried = 0;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t left, std::uint64_t rem) -> bool {
    if (left == 0) {
      if (rem != 0) return false;
      ++tried;
      return visit(cur) || tried >= max_tries;
    }
    if (elems.size() - from < left) return false;
    for (std::size_t i = from; i + left <= elems.size(); ++i) {
      cur.push_back(elems[i]);
      if (self(self, i + 1, left - 1, G.sub(rem, elems[i]))) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0, m, target);
}

}  // namespace detail

/// Represent target as a sum of k distinct elements using a base triple (odd
/// k) or quadruple (even k) plus ell disjoint pairs summing to beta, where
/// k = base + 2*ell.  Requires Gamma_3(A) = Gamma_4(A) = G and a pair supply
/// of at least floor((k-3)/2) + 4 when ell >= 1.
inline RepresentResult pair_padding_represent(const GroupSpec& G, const ElementSet& A,
                                              std::uint32_t k, std::uint64_t target) {
  if (k < 3) throw ConfigError("pair_padding_represent: need k >= 3");
  if (target >= G.order) throw ConfigError("pair_padding_represent: target out of range");
  if (A.universe() != G.order) throw ConfigError("pair_padding_represent: universe mismatch");
  if (k > A.count()) return RepresentResult::fail("k exceeds |A|");
  if (A.count() < 4) return RepresentResult::fail("gamma4_full");
  const auto table = restricted_sumset_table(G, A, 4);
  if (!table.layers[3].is_full()) return RepresentResult::fail("gamma3_full");
  if (!table.layers[4].is_full()) return RepresentResult::fail("gamma4_full");

  const std::uint32_t base = (k % 2 == 1) ? 3 : 4;
  const std::uint32_t ell = (k - base) / 2;
  const auto elems = A.to_indices();

  if (ell == 0) {
    auto w = dp_witness(table, base, target);
    SUMSETLAB_CHECK(w.has_value(), "full layer without witness");
    RepresentResult res;
    res.ok = true;
    res.witness = std::move(*w);
    detail::validate_witness(G, A, k, target, res.witness);
    return res;
  }

  if (G.order % 2 == 0) return RepresentResult::fail("odd_order");
  const PairFamily fam = best_pair_sum(G, A);
  const std::uint64_t need = static_cast<std::uint64_t>((k - 3) / 2) + 4;
  if (fam.n_pair() < need) return RepresentResult::fail("pair_supply");

  const std::uint64_t base_target = G.sub(target, G.smul(ell, fam.beta));
  RepresentResult res;
  // any base kills at most `base` pairs, so with n_pair >= ell + 4 the first
  // base normally survives; retry over further bases for robustness
  detail::find_subset_sums(
      G, elems, base, base_target,
      [&](const std::vector<std::uint64_t>& b) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> surviving;
        for (const auto& pr : fam.pairs) {
          bool hit = false;
          for (auto e : b)
            if (e == pr.first || e == pr.second) hit = true;
          if (!hit) surviving.push_back(pr);
        }
        if (surviving.size() < ell) return false;
        res.ok = true;
        res.witness = b;
        for (std::uint32_t i = 0; i < ell; ++i) {
          res.witness.push_back(surviving[i].first);
          res.witness.push_back(surviving[i].second);
        }
        return true;
      },
      32);
  if (!res.ok) return RepresentResult::fail("pair_avoidance");
  detail::validate_witness(G, A, k, target, res.witness);
  return res;
}

/// Represent target by splitting along a prime quotient pi: G -> Z_p with
/// kernel H of size h: pick ell = k - 3 elements outside H whose residues sum
/// to pi(target), then finish with a kernel triple.  Requires p >= 7, h >= 4,
/// A normalized (densest fiber over 0), Gamma_3(A_0) = H, and outside mass
/// u > (p-2)h/2.
inline RepresentResult fiber_lift_represent(const GroupSpec& G, const QuotientMap& pi,
                                            const ElementSet& A, std::uint32_t k,
                                            std::uint64_t target) {
  if (k < 3) throw ConfigError("fiber_lift_represent: need k >= 3");
  if (target >= G.order) throw ConfigError("fiber_lift_represent: target out of range");
  if (A.universe() != G.order) throw ConfigError("fiber_lift_represent: universe mismatch");
  if (pi.parent != G) throw ConfigError("fiber_lift_represent: quotient for another group");
  const std::uint64_t p = pi.d;
  if (p < 7 || !is_prime_u64(p)) return RepresentResult::fail("p_ge_7");
  const ElementSet kernel = pi.kernel_set();
  const std::uint64_t h = kernel.count();
  if (h < 4) return RepresentResult::fail("kernel_ge_4");

  std::vector<std::uint64_t> fiber(p, 0);
  A.for_each([&](std::uint64_t i) { ++fiber[pi(i)]; });
  for (std::uint64_t r = 1; r < p; ++r)
    if (fiber[r] > fiber[0]) return RepresentResult::fail("normalized");

  ElementSet A0 = A;
  A0 &= kernel;
  if (A0.count() < 3) return RepresentResult::fail("gamma3_kernel");
  const auto kernel_table = restricted_sumset_table(G, A0, 3);
  if (kernel_table.layers[3] != kernel) return RepresentResult::fail("gamma3_kernel");

  std::vector<std::uint64_t> vmult(p, 0);
  for (std::uint64_t r = 1; r < p; ++r) vmult[r] = fiber[r];
  const Multiset U = Multiset::from_mult(p, std::move(vmult));
  const std::uint64_t u = U.total();
  if (2 * u <= (p - 2) * h) return RepresentResult::fail("mass_hypothesis");

  const std::uint32_t ell = k - 3;
  if (ell >= 3 && ell + p > u + 1) return RepresentResult::fail("length_range");
  if (ell > u) return RepresentResult::fail("length_range");

  const std::uint64_t s = pi(target);
  const auto counts = sigma_witness(U, ell, s);
  if (!counts) return RepresentResult::fail("residue_unreachable");

  // realize the residue counts by the smallest-index elements of each fiber
  std::vector<std::uint64_t> outside;
  {
    std::vector<std::uint64_t> taken(p, 0);
    A.for_each([&](std::uint64_t i) {
      const std::uint64_t r = pi(i);
      if (r != 0 && taken[r] < (*counts)[r]) {
        ++taken[r];
        outside.push_back(i);
      }
    });
    std::uint64_t want = 0;
    for (auto c : *counts) want += c;
    SUMSETLAB_CHECK(outside.size() == want && want == ell, "fiber pick mismatch");
  }
  std::uint64_t partial = 0;
  for (auto e : outside) partial = G.add(partial, e);
  const std::uint64_t kernel_target = G.sub(target, partial);
  SUMSETLAB_CHECK(pi(kernel_target) == 0, "kernel target escaped the kernel");
  auto triple = dp_witness(kernel_table, 3, kernel_target);
  SUMSETLAB_CHECK(triple.has_value(), "kernel triple missing despite full Gamma_3(A_0)");

  RepresentResult res;
  res.ok = true;
  res.witness = std::move(outside);
  res.witness.insert(res.witness.end(), triple->begin(), triple->end());
  detail::validate_witness(G, A, k, target, res.witness);
  return res;
}

}  // namespace sumsetlab
