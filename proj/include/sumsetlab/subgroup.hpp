#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

/// Subgroup given by its member set.  Closure is verified on construction:
/// exhaustively for |G| <= 256, by sampling above that.
struct Subgroup {
  GroupSpec parent;
  ElementSet members;
  std::uint64_t index = 0;

  Subgroup(GroupSpec g, ElementSet m) : parent(std::move(g)), members(std::move(m)) {
    if (members.universe() != parent.order)
      throw ConfigError("Subgroup: member set universe mismatch");
    const std::uint64_t h = members.count();
    if (h == 0 || !members.test(0))
      throw ConfigError("Subgroup: must contain the identity");
    if (parent.order % h != 0)
      throw ConfigError("Subgroup: size does not divide group order");
    index = parent.order / h;
    verify_closure();
  }

  std::uint64_t size() const { return members.count(); }

 private:
  void verify_closure() const {
    const auto elems = members.to_indices();
    if (parent.order <= 256) {
      for (auto a : elems)
        for (auto b : elems)
          if (!members.test(parent.add(a, b)))
            throw ConfigError("Subgroup: not closed under addition");
      for (auto a : elems)
        if (!members.test(parent.neg(a)))
          throw ConfigError("Subgroup: not closed under negation");
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      for (int t = 0; t < 4096; ++t) {
        const auto a = elems[pick(rng)], b = elems[pick(rng)];
        if (!members.test(parent.add(a, b)) || !members.test(parent.neg(a)))
          throw ConfigError("Subgroup: not closed under addition");
      }
    }
  }
};

/// Surjection pi: G -> Z_d with kernel of index d.  residue caches pi per
/// element index.
struct QuotientMap {
  GroupSpec parent;
  std::uint64_t d = 0;
  std::vector<std::uint16_t> residue;

  QuotientMap(GroupSpec g, std::uint64_t mod, std::vector<std::uint16_t> res)
      : parent(std::move(g)), d(mod), residue(std::move(res)) {
    if (residue.size() != parent.order)
      throw ConfigError("QuotientMap: residue table size mismatch");
    if (d < 2 || d > 0xffff) throw ConfigError("QuotientMap: modulus out of range");
    validate();
  }

  std::uint64_t operator()(std::uint64_t idx) const { return residue[idx]; }

  ElementSet kernel_set() const {
    ElementSet k(parent.order);
    for (std::uint64_t i = 0; i < parent.order; ++i)
      if (residue[i] == 0) k.set(i);
    return k;
  }

  Subgroup kernel() const { return Subgroup(parent, kernel_set()); }

  /// Fibers pi^{-1}(0), ..., pi^{-1}(d-1) in residue order.
  std::vector<ElementSet> cosets() const {
    std::vector<ElementSet> cs(d, ElementSet(parent.order));
    for (std::uint64_t i = 0; i < parent.order; ++i) cs[residue[i]].set(i);
    return cs;
  }

 private:
  void validate() const {
    if (residue[0] != 0) throw ConfigError("QuotientMap: identity must map to 0");
    std::vector<bool> seen(d, false);
    for (auto r : residue) {
      if (r >= d) throw ConfigError("QuotientMap: residue out of range");
      seen[r] = true;
    }
    for (std::uint64_t r = 0; r < d; ++r)
      if (!seen[r]) throw ConfigError("QuotientMap: not surjective");
    const std::uint64_t g = parent.order;
    auto check_pair = [&](std::uint64_t a, std::uint64_t b) {
      const std::uint64_t s = parent.add(a, b);
      if ((residue[a] + residue[b]) % d != residue[s])
        throw ConfigError("QuotientMap: not a homomorphism");
    };
    if (g <= 128) {
      for (std::uint64_t a = 0; a < g; ++a)
        for (std::uint64_t b = 0; b < g; ++b) check_pair(a, b);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::uint64_t> pick(0, g - 1);
      for (int t = 0; t < 10000; ++t) check_pair(pick(rng), pick(rng));
    }
  }
};

struct PrimeIndexQuotient {
  QuotientMap map;
  Subgroup subgroup;  // kernel, of index d
};

/// All index-d subgroups of G for prime d | |G|, via surjections G -> Z_d
/// modulo unit scaling.  Count is (d^s - 1)/(d - 1) with s the d-rank.
inline std::vector<PrimeIndexQuotient> prime_index_subgroups(const GroupSpec& G,
                                                             std::uint64_t d) {
  if (!is_prime_u64(d)) throw ConfigError("prime_index_subgroups: index must be prime");
  if (G.order % d != 0)
    throw ConfigError("prime_index_subgroups: index must divide the group order");
  const std::size_t r = G.rank();
  std::vector<std::uint64_t> allowed(r);  // 1 if the factor admits a nonzero image
  for (std::size_t j = 0; j < r; ++j) allowed[j] = (G.factors[j] % d == 0) ? 1 : 0;

  std::vector<PrimeIndexQuotient> out;
  std::vector<std::uint64_t> c(r, 0);
  // enumerate coefficient vectors with first nonzero coordinate == 1
  auto emit = [&](const std::vector<std::uint64_t>& coef) {
    std::vector<std::uint16_t> res(G.order);
    // incremental residue fill via odometer walk
    std::vector<std::uint64_t> coords(r, 0);
    std::uint64_t cur = 0;
    for (std::uint64_t i = 0;; ++i) {
      res[i] = static_cast<std::uint16_t>(cur);
      if (i + 1 == G.order) break;
      std::size_t j = 0;
      for (;; ++j) {
        ++coords[j];
        cur = (cur + coef[j]) % d;
        if (coords[j] < G.factors[j]) break;
        coords[j] = 0;
        cur = (cur + d - (coef[j] * (G.factors[j] % d)) % d) % d;
      }
    }
    QuotientMap q(G, d, std::move(res));
    Subgroup k = q.kernel();
    out.push_back(PrimeIndexQuotient{std::move(q), std::move(k)});
  };

  auto rec = [&](auto&& self, std::size_t j, bool nonzero_seen) -> void {
    if (j == r) {
      if (nonzero_seen) emit(c);
      return;
    }
    c[j] = 0;
    self(self, j + 1, nonzero_seen);
    if (allowed[j]) {
      // canonical representative per kernel: first nonzero coefficient is 1
      const std::uint64_t hi = nonzero_seen ? d - 1 : 1;
      for (std::uint64_t v = 1; v <= hi; ++v) {
        c[j] = v;
        self(self, j + 1, true);
      }
      c[j] = 0;
    }
  };
  rec(rec, 0, false);
  return out;
}

}  // namespace sumsetlab
