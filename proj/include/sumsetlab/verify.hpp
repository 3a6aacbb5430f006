#pragma once

// Tiered self-verification: every module's invariants exercised against the
// brute-force oracles, plus the ten acceptance-scale property checks shared
// by the test suite and the `verify` CLI subcommand.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sumsetlab/codes.hpp"
#include "sumsetlab/common.hpp"
#include "sumsetlab/constructive.hpp"
#include "sumsetlab/critical.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/obstructions.hpp"
#include "sumsetlab/oracles.hpp"
#include "sumsetlab/serialize.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  std::string detail;  // first failing instance, serialized

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void fail(const ordered_json& j) {
    if (!passed) return;  // keep the first counterexample
    passed = false;
    detail = j.dump();
  }
};

namespace verify_detail {

inline std::vector<std::uint64_t> random_distinct(std::mt19937_64& rng, std::uint64_t g,
                                                  std::uint64_t size) {
  std::vector<std::uint64_t> all(g);
  for (std::uint64_t i = 0; i < g; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

inline ElementSet random_set(std::mt19937_64& rng, std::uint64_t g, std::uint64_t size) {
  return ElementSet::from_indices(g, random_distinct(rng, g, size));
}

inline std::vector<GroupSpec> groups_up_to(std::uint64_t max_order, std::uint64_t min_order = 2) {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = min_order; n <= max_order; ++n)
    for (const auto& factors : abelian_group_types(n))
      out.push_back(GroupSpec::from_factors(GroupSpec::from_factors(factors).canonical_factors()));
  return out;
}

inline ordered_json instance_json(const GroupSpec& G, const ElementSet& A) {
  ordered_json j;
  j["group"] = G.name();
  j["set"] = json_element_set(A);
  return j;
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Granular checks.  Each returns a CheckResult with an instance count.

/// Gamma_k DP layers against one-pass subset enumeration, all k at once.
inline CheckResult check_gamma_oracle(std::uint64_t max_order, std::uint32_t sets_per_group,
                                      std::uint64_t seed) {
  CheckResult res{"gamma_dp_matches_bruteforce"};
  std::mt19937_64 rng(seed);
  for (const auto& G : verify_detail::groups_up_to(max_order)) {
    std::uniform_int_distribution<std::uint64_t> size_dist(1, G.order);
    for (std::uint32_t s = 0; s < sets_per_group; ++s) {
      const auto elems = verify_detail::random_distinct(rng, G.order, size_dist(rng));
      const ElementSet A = ElementSet::from_indices(G.order, elems);
      const auto table = restricted_sumset_table(G, A, elems.size());
      const auto truth = oracle::brute_gamma_all(G, elems);
      ++res.instances;
      for (std::uint32_t k = 0; k <= elems.size(); ++k) {
        if (table.layer(k) == truth[k]) continue;
        ordered_json j = verify_detail::instance_json(G, A);
        j["k"] = k;
        j["dp"] = json_element_set(table.layer(k));
        j["oracle"] = json_element_set(truth[k]);
        res.fail(j);
        return res;
      }
    }
  }
  return res;
}

/// Gamma_k(A) = Abar - Gamma_{a-k}(A) on a full table; usable standalone so a
/// corrupted table can be fed in by the fault-injection test.
inline CheckResult check_complement_identity_table(const GroupSpec& G, const ElementSet& A,
                                                   const SumsetTable& table) {
  CheckResult res{"gamma_complement_identity"};
  const std::uint64_t a = A.count();
  SUMSETLAB_CHECK(table.k_max >= a, "complement check needs a full table");
  std::uint64_t abar = 0;
  A.for_each([&](std::uint64_t e) { abar = G.add(abar, e); });
  for (std::uint64_t k = 0; k <= a; ++k) {
    const ElementSet rhs = translate(G, negate_set(G, table.layer(a - k)), abar);
    ++res.instances;
    if (table.layer(k) == rhs) continue;
    ordered_json j = verify_detail::instance_json(G, A);
    j["k"] = k;
    j["gamma_k"] = json_element_set(table.layer(k));
    j["abar_minus_gamma_rest"] = json_element_set(rhs);
    res.fail(j);
    return res;
  }
  return res;
}

inline CheckResult check_complement_identity(std::uint64_t max_order, std::uint32_t sets,
                                             std::uint64_t seed) {
  CheckResult res{"gamma_complement_identity"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> ord(2, max_order);
  for (std::uint32_t s = 0; s < sets; ++s) {
    const std::uint64_t g = ord(rng);
    const auto types = abelian_group_types(g);
    const GroupSpec G = GroupSpec::from_factors(types[rng() % types.size()]);
    std::uniform_int_distribution<std::uint64_t> size_dist(1, g);
    const ElementSet A = verify_detail::random_set(rng, g, size_dist(rng));
    const auto table = restricted_sumset_table(G, A, A.count());
    auto sub = check_complement_identity_table(G, A, table);
    res.instances += sub.instances;
    if (!sub.passed) {
      res.passed = false;
      res.detail = sub.detail;
      return res;
    }
  }
  return res;
}

/// Layers 0..|A| are nonempty and Gamma_0 = {0}.
inline CheckResult check_layer_shape(std::uint64_t max_order, std::uint32_t sets,
                                     std::uint64_t seed) {
  CheckResult res{"gamma_layers_nonempty"};
  std::mt19937_64 rng(seed);
  for (const auto& G : verify_detail::groups_up_to(max_order, std::max<std::uint64_t>(2, max_order / 2))) {
    std::uniform_int_distribution<std::uint64_t> size_dist(1, G.order);
    for (std::uint32_t s = 0; s < sets; ++s) {
      const ElementSet A = verify_detail::random_set(rng, G.order, size_dist(rng));
      const auto table = restricted_sumset_table(G, A, A.count());
      ++res.instances;
      bool ok = table.layer(0).count() == 1 && table.layer(0).test(0);
      for (std::uint64_t k = 1; ok && k <= A.count(); ++k) ok = !table.layer(k).empty();
      if (!ok) res.fail(verify_detail::instance_json(G, A));
      if (!res.passed) return res;
    }
  }
  return res;
}

/// |Gamma_k(A)| >= min{p, k|A| - k^2 + 1} on sampled subsets of Z_p.
inline CheckResult check_dsh_sampled(const std::vector<std::uint64_t>& primes, std::uint32_t sets,
                                     std::uint64_t seed) {
  CheckResult res{"dsh_bound_sampled"};
  std::mt19937_64 rng(seed);
  for (std::uint64_t p : primes) {
    const GroupSpec G = GroupSpec::from_factors({p});
    std::uniform_int_distribution<std::uint64_t> size_dist(1, p);
    for (std::uint32_t s = 0; s < sets; ++s) {
      const ElementSet A = verify_detail::random_set(rng, p, size_dist(rng));
      const std::uint64_t a = A.count();
      const auto table = restricted_sumset_table(G, A, a);
      ++res.instances;
      for (std::uint64_t k = 1; k <= a; ++k) {
        if (table.layer(k).count() >= dsh_bound(p, a, k)) continue;
        ordered_json j = verify_detail::instance_json(G, A);
        j["k"] = k;
        j["size"] = table.layer(k).count();
        j["bound"] = dsh_bound(p, a, k);
        res.fail(j);
        return res;
      }
    }
  }
  return res;
}

/// |Sigma_ell(U)| >= 1 - ell + sum min{ell, v} when Sigma_ell is not all of
/// Z_p, plus the truncated-mass minimum as a lower bound for the sum term.
inline CheckResult check_dgm_sampled(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"dgm_bound_sampled"};
  static const std::uint64_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::mt19937_64 rng(seed);
  for (std::uint32_t t = 0; t < instances; ++t) {
    const std::uint64_t p = primes[rng() % std::size(primes)];
    std::uniform_int_distribution<std::uint32_t> mult_dist(0, 4);
    Multiset U;
    U.p = p;
    U.mult.assign(p, 0);
    for (std::uint64_t v = 0; v < p; ++v) U.mult[v] = mult_dist(rng);
    const std::uint64_t u = U.total();
    if (u == 0) continue;
    const std::uint32_t ell = 1 + static_cast<std::uint32_t>(rng() % u);
    const ElementSet sig = multiset_sigma(U, ell);
    ++res.instances;
    if (sig.count() < p && static_cast<std::int64_t>(sig.count()) < dgm_bound(U, ell)) {
      ordered_json j;
      j["p"] = p;
      j["mult"] = U.mult;
      j["ell"] = ell;
      j["size"] = sig.count();
      j["bound"] = dgm_bound(U, ell);
      res.fail(j);
      return res;
    }
    // truncated mass: sum min(ell, v) over any U with max mult <= h and total
    // u is at least q*ell + min(ell, r)
    std::uint64_t h = 0;
    for (auto m : U.mult) h = std::max(h, m);
    if (h > 0 && ell <= h && u <= (p - 1) * h) {
      std::int64_t mass = 0;
      for (auto m : U.mult) mass += std::min<std::uint64_t>(ell, m);
      if (mass < static_cast<std::int64_t>(min_truncated_mass(p, h, ell, u))) {
        ordered_json j;
        j["p"] = p;
        j["mult"] = U.mult;
        j["ell"] = ell;
        j["h"] = h;
        res.fail(j);
        return res;
      }
    }
  }
  return res;
}

/// Sigma DP against subset enumeration on the expanded list.
inline CheckResult check_sigma_oracle(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"sigma_dp_matches_bruteforce"};
  static const std::uint64_t primes[] = {3, 5, 7, 11, 13};
  std::mt19937_64 rng(seed);
  for (std::uint32_t t = 0; t < instances; ++t) {
    const std::uint64_t p = primes[rng() % std::size(primes)];
    Multiset U;
    U.p = p;
    U.mult.assign(p, 0);
    std::uint64_t u = 0;
    while (u < 10) {
      const std::uint64_t v = rng() % p;
      if (rng() % 3 == 0) break;
      U.mult[v]++;
      ++u;
    }
    if (u == 0) continue;
    ++res.instances;
    for (std::uint32_t ell = 0; ell <= u; ++ell) {
      if (multiset_sigma(U, ell) == oracle::brute_sigma(U, ell)) continue;
      ordered_json j;
      j["p"] = p;
      j["mult"] = U.mult;
      j["ell"] = ell;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// An index-2 subgroup is closed under Gamma_k, so it never covers.
inline CheckResult check_even_rigidity(std::uint64_t max_order) {
  CheckResult res{"even_index2_rigidity"};
  for (const auto& G : verify_detail::groups_up_to(max_order, 4)) {
    const std::uint64_t g = G.order;
    if (g % 2 != 0 || g / 2 < 5) continue;
    for (const auto& piq : prime_index_subgroups(G, 2)) {
      const ElementSet H = piq.map.kernel_set();
      const auto table = restricted_sumset_table(G, H, std::min<std::uint64_t>(H.count(), g / 2 - 2));
      for (std::uint64_t k = 3; k + 2 <= g / 2; ++k) {
        ++res.instances;
        if (table.layer(k).count() == g || !table.layer(k).subset_of(H)) {
          ordered_json j = verify_detail::instance_json(G, H);
          j["k"] = k;
          res.fail(j);
          return res;
        }
      }
    }
    const auto barrier = even_lower_bound(G, 3);
    ++res.instances;
    if (!barrier || barrier->first != g / 2 + 1) {
      ordered_json j;
      j["group"] = G.name();
      j["what"] = "index-2 barrier missing";
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Exhaustive mu via the engine equals the 2^g definition scan.
inline CheckResult check_mu_small(std::uint64_t max_order, std::uint64_t seed) {
  CheckResult res{"mu_exact_matches_bruteforce"};
  (void)seed;
  for (const auto& G : verify_detail::groups_up_to(max_order, 4)) {
    for (std::uint32_t k : {3u, 4u}) {
      if (k + 1 > G.order) continue;
      const auto rec = mu_k_exact(G, k);
      const std::uint64_t truth = oracle::brute_mu(G, k);
      ++res.instances;
      if (!rec.certified || !rec.mu_exact || *rec.mu_exact != truth) {
        ordered_json j;
        j["group"] = G.name();
        j["k"] = k;
        j["oracle_mu"] = truth;
        if (rec.mu_exact) j["engine_mu"] = *rec.mu_exact;
        j["certified"] = rec.certified;
        res.fail(j);
        return res;
      }
    }
  }
  return res;
}

/// Canonical invariant factors against gcd/lcm merging, plus frozen counts of
/// isomorphism types for a few orders.
inline CheckResult check_canonical_factors(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"canonical_factors_smith"};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::uint64_t, std::size_t>> frozen = {
      {2, 1}, {4, 2}, {8, 3}, {12, 2}, {16, 5}, {24, 3}, {36, 4}, {60, 2}, {64, 11}};
  for (const auto& [n, count] : frozen) {
    ++res.instances;
    if (abelian_group_types(n).size() != count) {
      ordered_json j;
      j["order"] = n;
      j["expected_types"] = count;
      j["got_types"] = abelian_group_types(n).size();
      res.fail(j);
      return res;
    }
  }
  for (std::uint32_t t = 0; t < instances; ++t) {
    std::vector<std::uint64_t> factors;
    const std::uint32_t r = 1 + rng() % 3;
    for (std::uint32_t i = 0; i < r; ++i) factors.push_back(2 + rng() % 11);
    std::uint64_t order = 1;
    for (auto f : factors) order *= f;
    if (order > kOrderCap) continue;
    const GroupSpec G = GroupSpec::from_factors(factors);
    const auto canon = G.canonical_factors();
    const auto truth = oracle::smith_invariant_factors(factors);
    ++res.instances;
    if (canon != truth) {
      ordered_json j;
      j["factors"] = factors;
      j["canonical"] = canon;
      j["oracle"] = truth;
      res.fail(j);
      return res;
    }
    for (std::size_t i = 0; i + 1 < canon.size(); ++i)
      if (canon[i + 1] % canon[i] != 0) {
        ordered_json j;
        j["factors"] = factors;
        j["canonical"] = canon;
        res.fail(j);
        return res;
      }
  }
  return res;
}

/// Index-d subgroup enumeration against the closed-subset scan.
inline CheckResult check_prime_index_subgroups(std::uint64_t max_order) {
  CheckResult res{"prime_index_subgroups_vs_bruteforce"};
  for (const auto& G : verify_detail::groups_up_to(std::min<std::uint64_t>(max_order, 16))) {
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
      if (G.order % d != 0 || G.order == d) continue;
      std::vector<ElementSet> engine;
      for (const auto& piq : prime_index_subgroups(G, d)) engine.push_back(piq.map.kernel_set());
      std::vector<ElementSet> truth;
      for (auto& s : oracle::brute_subgroups_of_order(G, G.order / d)) {
        // keep only subgroups whose quotient is Z_d, i.e. any index-d subgroup
        truth.push_back(std::move(s));
      }
      auto key = [](const ElementSet& s) {
        std::string k;
        for (std::uint64_t e : s.to_indices()) k += std::to_string(e) + ",";
        return k;
      };
      std::vector<std::string> ek, tk;
      for (const auto& s : engine) ek.push_back(key(s));
      for (const auto& s : truth) tk.push_back(key(s));
      std::sort(ek.begin(), ek.end());
      std::sort(tk.begin(), tk.end());
      ++res.instances;
      if (ek != tk) {
        ordered_json j;
        j["group"] = G.name();
        j["d"] = d;
        j["engine_count"] = ek.size();
        j["oracle_count"] = tk.size();
        res.fail(j);
        return res;
      }
    }
  }
  return res;
}

/// normalize_translate sends a densest fiber to the kernel and preserves the
/// fiber-size multiset; half-dense sets get a half-dense kernel fiber.
inline CheckResult check_normalization(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"normalize_densest_fiber"};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> cases = {
      {{30}, 5}, {{30}, 3}, {{2, 12}, 2}, {{2, 12}, 3}, {{35}, 7}, {{4, 4}, 2}};
  for (std::uint32_t t = 0; t < instances; ++t) {
    const auto& [factors, d] = cases[t % cases.size()];
    const GroupSpec G = GroupSpec::from_factors(factors);
    const auto quots = prime_index_subgroups(G, d);
    const auto& pi = quots[rng() % quots.size()].map;
    std::uniform_int_distribution<std::uint64_t> size_dist(1, G.order);
    const ElementSet A = verify_detail::random_set(rng, G.order, size_dist(rng));
    const auto dec = normalize_translate(G, pi, A);
    ++res.instances;
    std::vector<std::uint64_t> before(pi.d, 0), after(pi.d, 0);
    A.for_each([&](std::uint64_t e) { before[pi.residue[e]]++; });
    dec.translated.for_each([&](std::uint64_t e) { after[pi.residue[e]]++; });
    const std::uint64_t maxf = *std::max_element(before.begin(), before.end());
    bool ok = after[0] == maxf;
    std::sort(before.begin(), before.end());
    std::vector<std::uint64_t> sorted_after = after;
    std::sort(sorted_after.begin(), sorted_after.end());
    ok = ok && before == sorted_after;
    if (2 * A.count() > G.order) ok = ok && 2 * after[0] > G.order / pi.d;
    if (!ok) {
      ordered_json j = verify_detail::instance_json(G, A);
      j["d"] = pi.d;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Obstruction flags recomputed from definitions.
inline CheckResult check_obstruction_consistency(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"obstruction_flags_consistency"};
  std::mt19937_64 rng(seed);
  const std::vector<std::vector<std::uint64_t>> factor_cases = {{10}, {12}, {15}, {16}, {2, 6}, {20}, {2, 10}};
  for (std::uint32_t t = 0; t < instances; ++t) {
    const GroupSpec G = GroupSpec::from_factors(factor_cases[t % factor_cases.size()]);
    const std::uint64_t g = G.order;
    std::uniform_int_distribution<std::uint64_t> size_dist(1, g);
    const ElementSet A = verify_detail::random_set(rng, g, size_dist(rng));
    const std::uint64_t tslack = rng() % 3;
    const auto rep = obstruction_scan(G, A, tslack);
    ++res.instances;
    bool ok = rep.density_low == (13 * A.count() <= 5 * g);
    for (const auto& hit : rep.index2)
      ok = ok && hit.excess <= tslack && A.count() - A.intersection_count(hit.coset) == hit.excess;
    for (const auto& hit : rep.index5) {
      ElementSet uni = hit.coset_a;
      uni |= hit.coset_b;
      ok = ok && hit.excess <= tslack && A.count() - A.intersection_count(uni) == hit.excess;
    }
    if (A.count() >= 3) {
      const bool truth = oracle::brute_gamma(G, A.to_indices(), 3).count() == g;
      ok = ok && rep.gamma3_full == truth;
    }
    if (!ok) {
      ordered_json j = verify_detail::instance_json(G, A);
      j["t"] = tslack;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Distinct cosets of distinct index-2 subgroups meet in exactly g/4 points.
inline CheckResult check_coset_intersections(std::uint64_t max_order) {
  CheckResult res{"index2_coset_intersection_bound"};
  for (const auto& G : verify_detail::groups_up_to(max_order, 4)) {
    if (G.order % 2 != 0 || G.order % 4 != 0) continue;
    const std::uint64_t worst = coset_intersection_audit(G);
    ++res.instances;
    if (worst > G.order / 4) {
      ordered_json j;
      j["group"] = G.name();
      j["max_intersection"] = worst;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Window coverage over Z_3 / Z_5 against direct sigma unions.
inline CheckResult check_consecutive_cover(std::uint32_t u3_max, std::uint32_t u5_max) {
  CheckResult res{"consecutive_window_cover"};
  for (const auto& [p, window] :
       std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 3}, {5, 5}}) {
    const std::uint32_t ucap = (p == 3) ? u3_max : u5_max;
    const std::uint32_t umin = (p == 3) ? 2 : 4;
    // enumerate multisets over {1..p-1} with total u
    std::vector<std::uint64_t> mult(p, 0);
    auto rec = [&](auto&& self, std::uint64_t v, std::uint32_t left) -> bool {
      if (v == p) {
        if (left != 0) return true;
        Multiset U;
        U.p = p;
        U.mult = mult;
        const std::uint32_t u = static_cast<std::uint32_t>(U.total());
        if (u < umin) return true;
        for (std::uint32_t ell = 1; ell + window - 1 <= u; ++ell) {
          const auto rep = consecutive_cover(p, U, ell);
          ElementSet uni(p);
          for (std::uint32_t L = ell; L < ell + window; ++L) uni |= oracle::brute_sigma(U, L);
          ++res.instances;
          bool ok = rep.covered == (uni.count() == p);
          if (ok && rep.covered) {
            for (std::uint64_t rsd = 0; rsd < p && ok; ++rsd) {
              const auto& w = rep.per_residue[rsd];
              ok = w.has_value();
              if (ok) {
                // witness length in window, counts signature sums to it
                ok = w->length >= ell && w->length < ell + window;
                std::uint64_t total = 0, val = 0;
                for (std::uint64_t v2 = 0; v2 < p; ++v2) {
                  total += w->counts[v2];
                  val = (val + w->counts[v2] * v2) % p;
                  ok = ok && w->counts[v2] <= U.mult[v2];
                }
                ok = ok && total == w->length && val == rsd;
              }
            }
          }
          if (!ok) {
            ordered_json j;
            j["p"] = p;
            j["mult"] = U.mult;
            j["ell"] = ell;
            res.fail(j);
            return false;
          }
        }
        return true;
      }
      for (std::uint32_t c = 0; c <= left; ++c) {
        mult[v] = (v == 0) ? 0 : c;
        if (!self(self, v + 1, v == 0 ? left : left - c)) return false;
        if (v == 0) break;
      }
      mult[v] = 0;
      return true;
    };
    for (std::uint32_t u = umin; u <= ucap; ++u)
      if (!rec(rec, 0, u)) return res;
  }
  return res;
}

/// Full-sigma predicate: hypotheses flagged correctly, and whenever they hold
/// the subsums cover Z_p (the engine asserts this internally too).
inline CheckResult check_sigma_full(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"sigma_full_predicate"};
  std::mt19937_64 rng(seed);
  static const std::uint64_t primes[] = {7, 11, 13};
  for (std::uint32_t t = 0; t < instances; ++t) {
    const std::uint64_t p = primes[rng() % std::size(primes)];
    const std::uint32_t h = 4 + rng() % 3;
    Multiset U;
    U.p = p;
    U.mult.assign(p, 0);
    for (std::uint64_t v = 1; v < p; ++v) U.mult[v] = rng() % (h + 1);
    const std::uint64_t u = U.total();
    if (u == 0) continue;
    const std::uint32_t ell = 1 + rng() % static_cast<std::uint32_t>(u);
    const auto r = sigma_full_predicate(p, h, U, ell);
    ++res.instances;
    const bool mass_ok = 2 * u > (p - 2) * h;
    const bool range_ok = ell >= 3 && ell + p <= u + 1;
    bool ok = r.hypotheses_met == (mass_ok && range_ok);
    if (r.hypotheses_met) ok = ok && r.full && multiset_sigma(U, ell).count() == p;
    if (!ok) {
      ordered_json j;
      j["p"] = p;
      j["h"] = h;
      j["mult"] = U.mult;
      j["ell"] = ell;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Pair family: disjoint pairs of constant sum covering at least the counting
/// floor ceil((a^2/g - 1)/2).
inline CheckResult check_best_pair_sum(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"pair_family_counting_floor"};
  std::mt19937_64 rng(seed);
  static const std::uint64_t odd_orders[] = {15, 21, 35, 45, 63};
  for (std::uint32_t t = 0; t < instances; ++t) {
    const std::uint64_t g = odd_orders[rng() % std::size(odd_orders)];
    const GroupSpec G = GroupSpec::from_factors({g});
    std::uniform_int_distribution<std::uint64_t> size_dist(2, g);
    const ElementSet A = verify_detail::random_set(rng, g, size_dist(rng));
    const std::uint64_t a = A.count();
    const auto fam = best_pair_sum(G, A);
    ++res.instances;
    // n_beta >= a^2/g  =>  pairs >= ceil((ceil(a^2/g) - 1)/2)
    const std::uint64_t nbeta_floor = (a * a + g - 1) / g;
    const std::uint64_t floor_pairs = nbeta_floor == 0 ? 0 : (nbeta_floor - 1 + 1) / 2;
    bool ok = fam.pairs.size() >= floor_pairs;
    ElementSet seen(g);
    for (const auto& [x, y] : fam.pairs) {
      ok = ok && x != y && A.test(x) && A.test(y) && G.add(x, y) == fam.beta;
      ok = ok && !seen.test(x) && !seen.test(y);
      seen.set(x);
      seen.set(y);
    }
    if (!ok) {
      ordered_json j = verify_detail::instance_json(G, A);
      j["beta"] = fam.beta;
      j["pairs"] = fam.pairs.size();
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Constructive witnesses agree with DP membership whenever they are issued.
inline CheckResult check_represent_soundness(std::uint32_t target_instances, std::uint64_t seed) {
  CheckResult res{"constructive_witnesses_sound"};
  std::mt19937_64 rng(seed);
  static const std::uint64_t odd_orders[] = {35, 45, 63, 99};
  std::uint32_t made = 0;
  while (made < target_instances) {
    const std::uint64_t g = odd_orders[rng() % std::size(odd_orders)];
    const GroupSpec G = GroupSpec::from_factors({g});
    std::uniform_int_distribution<std::uint64_t> size_dist(g / 2, g);
    const ElementSet A = verify_detail::random_set(rng, g, size_dist(rng));
    const std::uint64_t a = A.count();
    if (a < 8) continue;
    const std::uint32_t k = 3 + static_cast<std::uint32_t>(rng() % std::min<std::uint64_t>(a - 3, 12));
    const auto table = restricted_sumset_table(G, A, k);
    const std::uint64_t target = rng() % g;
    const bool member = table.layer(k).test(target);
    const auto r = pair_padding_represent(G, A, k, target);
    ++res.instances;
    ++made;
    bool ok = true;
    if (r.ok) {
      ok = member;  // a witness for a non-member would be unsound
      std::uint64_t sum = 0;
      ElementSet used(g);
      ok = ok && r.witness.size() == k;
      for (std::uint64_t e : r.witness) {
        ok = ok && A.test(e) && !used.test(e);
        used.set(e);
        sum = G.add(sum, e);
      }
      ok = ok && sum == target;
    } else {
      // refusal must cite a hypothesis, and member refusals only come from
      // supply/avoidance/structure reasons, never silently
      ok = !r.failed_hypothesis.empty();
    }
    if (!ok) {
      ordered_json j = verify_detail::instance_json(G, A);
      j["k"] = k;
      j["target"] = target;
      j["ok"] = r.ok;
      j["failed_hypothesis"] = r.failed_hypothesis;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Point enumeration against the (x, y) grid; group law axioms; iso tables.
inline CheckResult check_elliptic_small(std::uint64_t seed) {
  CheckResult res{"elliptic_enumeration_and_law"};
  std::mt19937_64 rng(seed);
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        Curve c;
        try {
          c = build_curve(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
        } catch (const ConfigError&) {
          continue;
        }
        const auto en = enumerate_points(c);
        ++res.instances;
        if (en.count != oracle::brute_curve_count(c)) {
          ordered_json j;
          j["p"] = p;
          j["a"] = a;
          j["b"] = b;
          res.fail(j);
          return res;
        }
      }
  }
  // law axioms, exhaustive on a few curves with N <= 100
  for (const auto& [p, a, b] : std::vector<std::tuple<std::uint64_t, std::int64_t, std::int64_t>>{
           {13, 1, 1}, {17, 2, 3}, {23, 1, 5}}) {
    const Curve c = build_curve(p, a, b);
    const auto en = enumerate_points(c);
    if (en.count > 100) continue;
    for (const auto& P : en.points) {
      bool ok = ec_add(c, P, CurvePoint::infinity()) == P &&
                ec_add(c, P, ec_neg(c, P)).inf && on_curve(c, P);
      for (const auto& Q : en.points) {
        const CurvePoint s = ec_add(c, P, Q);
        ok = ok && on_curve(c, s) && s == ec_add(c, Q, P);
        const auto& R = en.points[rng() % en.points.size()];
        ok = ok && ec_add(c, s, R) == ec_add(c, P, ec_add(c, Q, R));
      }
      ++res.instances;
      if (!ok) {
        ordered_json j;
        j["p"] = p;
        j["point"] = P.to_string();
        res.fail(j);
        return res;
      }
    }
    // iso: scalar agreement fwd([m]Q) = m * fwd(Q)
    const GroupIso iso = group_structure_iso(c);
    for (const auto& P : en.points) {
      for (std::uint64_t m = 0; m <= en.count; ++m) {
        const std::uint64_t lhs = iso.fwd(ec_smul(c, static_cast<std::int64_t>(m), P));
        const std::uint64_t rhs =
            iso.abstract_group.smul(static_cast<std::int64_t>(m), iso.fwd(P));
        ++res.instances;
        if (lhs != rhs) {
          ordered_json j;
          j["p"] = p;
          j["point"] = P.to_string();
          j["m"] = m;
          res.fail(j);
          return res;
        }
      }
    }
  }
  return res;
}

/// Riemann-Roch basis dimension, generator rank, translation consistency.
inline CheckResult check_code_construction(std::uint32_t instances, std::uint64_t seed) {
  CheckResult res{"code_basis_rank_translation"};
  for (std::uint32_t k = 1; k <= 12; ++k) {
    ++res.instances;
    if (riemann_roch_basis(k).size() != k) {
      ordered_json j;
      j["k"] = k;
      res.fail(j);
      return res;
    }
  }
  std::mt19937_64 rng(seed);
  static const std::uint64_t primes[] = {7, 11, 13, 17, 19};
  for (std::uint32_t t = 0; t < instances; ++t) {
    const std::uint64_t p = primes[rng() % std::size(primes)];
    std::uniform_int_distribution<std::uint64_t> co(0, p - 1);
    Curve c;
    try {
      c = build_curve(p, static_cast<std::int64_t>(co(rng)), static_cast<std::int64_t>(co(rng)));
    } catch (const ConfigError&) {
      continue;
    }
    const auto en = enumerate_points(c);
    if (en.count < 5) continue;
    const std::uint64_t nmax = std::min<std::uint64_t>(en.count - 1, 12);
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % (nmax - 2));
    std::vector<std::uint32_t> idx(en.count);
    for (std::uint32_t i = 0; i < en.count; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<CurvePoint> pts;
    for (std::uint32_t i = 0; i < n; ++i) pts.push_back(en.points[idx[i]]);
    const CurvePoint q = en.points[idx[n]];
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % (n - 1));
    const CodeInstance code = build_code(c, pts, q, k);
    ++res.instances;
    // rank k is asserted inside build_code; translation consistency:
    std::vector<CurvePoint> shifted;
    for (const auto& pt : pts) shifted.push_back(ec_sub(c, pt, q));
    const CodeInstance base = build_code(c, shifted, CurvePoint::infinity(), k);
    if (!(code.gen == base.gen)) {
      ordered_json j;
      j["p"] = p;
      j["n"] = n;
      j["k"] = k;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// Minor-rank and sumset MDS verdicts agree; weight enumeration agrees when
/// p^k is small enough to sweep.
inline CheckResult check_mds_equivalence(std::uint32_t instances, std::uint64_t p_hi,
                                         std::uint64_t seed) {
  CheckResult res{"mds_rank_equals_sumset"};
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 5; p <= p_hi; ++p)
    if (is_prime_u64(p)) primes.push_back(p);
  // cache isos per curve so repeated instances stay cheap
  std::vector<std::pair<Curve, GroupIso>> cache;
  std::uint32_t made = 0;
  while (made < instances) {
    const std::uint64_t p = primes[rng() % primes.size()];
    std::uniform_int_distribution<std::uint64_t> co(0, p - 1);
    Curve c;
    try {
      c = build_curve(p, static_cast<std::int64_t>(co(rng)), static_cast<std::int64_t>(co(rng)));
    } catch (const ConfigError&) {
      continue;
    }
    const GroupIso* iso = nullptr;
    for (const auto& [cc, ii] : cache)
      if (cc == c) iso = &ii;
    if (!iso) {
      if (cache.size() >= 24) cache.clear();
      cache.emplace_back(c, group_structure_iso(c));
      iso = &cache.back().second;
    }
    const std::uint64_t N = iso->back_table.size();
    if (N < 3) continue;
    const std::uint64_t nmax = std::min<std::uint64_t>(N - 1, 12);
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % (nmax - 1));
    std::vector<std::uint32_t> idx(N);
    for (std::uint32_t i = 0; i < N; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<CurvePoint> pts;
    for (std::uint32_t i = 0; i < n; ++i) pts.push_back(iso->back(idx[i]));
    const CurvePoint q = iso->back(idx[n]);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % (n - 1));
    const CodeInstance code = build_code(c, pts, q, k);
    const MdsVerdict v = mds_check_dual(code, *iso);
    ++res.instances;
    ++made;
    bool ok = v.agree;
    std::uint64_t pk = 1;
    bool small = true;
    for (std::uint32_t i = 0; i < k && small; ++i) {
      pk *= p;
      if (pk > 100000) small = false;
    }
    if (ok && small) ok = (oracle::is_mds_enum(code) == v.rank_mds);
    if (!ok) {
      ordered_json j;
      j["p"] = p;
      j["a"] = c.a;
      j["b"] = c.b;
      j["n"] = n;
      j["k"] = k;
      ordered_json pj = ordered_json::array();
      for (const auto& pt : pts) pj.push_back(pt.to_string());
      j["P"] = pj;
      j["Q"] = q.to_string();
      j["rank_mds"] = v.rank_mds;
      j["sumset_mds"] = v.sumset_mds;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// JSON round-trips and byte-identical re-serialization.
inline CheckResult check_serialization(std::uint64_t seed) {
  CheckResult res{"serialization_roundtrip_deterministic"};
  std::mt19937_64 rng(seed);
  for (std::uint64_t g : {24ull, 80ull, 200ull}) {
    for (int t = 0; t < 10; ++t) {
      std::uniform_int_distribution<std::uint64_t> size_dist(0, g);
      const ElementSet s = verify_detail::random_set(rng, g, size_dist(rng));
      const ordered_json j1 = json_element_set(s);
      const ordered_json j2 = json_element_set(s);
      const ElementSet back = element_set_from_json(j1, g);
      ++res.instances;
      if (!(back == s) || j1.dump() != j2.dump()) {
        ordered_json j;
        j["universe"] = g;
        j["set"] = j1;
        res.fail(j);
        return res;
      }
    }
  }
  const GroupSpec G = GroupSpec::from_factors({8});
  const auto rec1 = mu_k_exact(G, 3);
  const auto rec2 = mu_k_exact(G, 3);
  ++res.instances;
  if (dump_artifact(json_critical_record(rec1)) != dump_artifact(json_critical_record(rec2))) {
    ordered_json j;
    j["what"] = "mu record serialization not deterministic";
    res.fail(j);
  }
  return res;
}

// ---------------------------------------------------------------------------
// The ten acceptance-scale checks.

/// 1: DP vs brute force for every group of order <= 24, 200 sets each.
inline CheckResult acceptance_gamma_oracle(std::uint64_t seed) {
  auto res = check_gamma_oracle(24, 200, seed);
  res.name = "acceptance_1_gamma_oracle_g24";
  return res;
}

/// 2: DSH bound, exhaustive over primes p <= 31 and all |A| <= 8.
inline CheckResult acceptance_dsh_exhaustive() {
  CheckResult res{"acceptance_2_dsh_exhaustive_p31"};
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    // DFS over subsets with at most 8 elements, one bit-word per layer
    const std::uint64_t full = (1ull << p) - 1;
    std::array<std::uint64_t, 9> layers{};
    layers[0] = 1;  // Gamma_0 = {0}
    std::vector<std::uint64_t> chosen;
    auto rot = [&](std::uint64_t w, std::uint64_t e) {
      if (e == 0) return w;
      return ((w << e) | (w >> (p - e))) & full;
    };
    bool ok = true;
    auto rec = [&](auto&& self, std::uint64_t next) -> void {
      if (!ok) return;
      const std::uint64_t a = chosen.size();
      if (a >= 1) {
        ++res.instances;
        for (std::uint64_t k = 1; k <= a; ++k) {
          const std::uint64_t sz = static_cast<std::uint64_t>(__builtin_popcountll(layers[k]));
          if (sz < dsh_bound(p, a, k)) {
            ordered_json j;
            j["p"] = p;
            j["A"] = chosen;
            j["k"] = k;
            j["size"] = sz;
            j["bound"] = dsh_bound(p, a, k);
            res.fail(j);
            ok = false;
            return;
          }
        }
      }
      if (a == 8) return;
      for (std::uint64_t e = next; e < p; ++e) {
        const auto saved = layers;
        for (std::uint64_t k = std::min<std::uint64_t>(8, a + 1); k >= 1; --k)
          layers[k] |= rot(layers[k - 1], e);
        chosen.push_back(e);
        self(self, e + 1);
        chosen.pop_back();
        layers = saved;
        if (!ok) return;
      }
    };
    rec(rec, 0);
    if (!ok) return res;
  }
  return res;
}

/// 3: DGM bound on 10^4 random multisets.
inline CheckResult acceptance_dgm_random(std::uint64_t seed) {
  auto res = check_dgm_sampled(10000, seed);
  res.name = "acceptance_3_dgm_random_10k";
  return res;
}

/// 4: even-order rigidity witnesses for g <= 32 plus three certified values.
inline CheckResult acceptance_even_rigidity(std::uint64_t seed) {
  CheckResult res = check_even_rigidity(32);
  res.name = "acceptance_4_even_rigidity_g32";
  if (!res.passed) return res;
  (void)seed;
  struct Frozen {
    std::vector<std::uint64_t> factors;
    std::uint64_t mu3;
  };
  // values pinned from the exhaustive 2^g oracle, re-derived here every run;
  // Z_8 sits above the g/2+1 floor: {0,1,2,3,4} misses 2, so mu_3 = 6
  const std::vector<Frozen> frozen = {{{8}, 6}, {{12}, 7}, {{2, 6}, 7}};
  for (const auto& f : frozen) {
    const GroupSpec G = GroupSpec::from_factors(f.factors);
    const auto rec = mu_k_exact(G, 3);
    const std::uint64_t truth = oracle::brute_mu(G, 3);
    ++res.instances;
    if (!rec.certified || !rec.mu_exact || *rec.mu_exact != f.mu3 || truth != f.mu3) {
      ordered_json j;
      j["group"] = G.name();
      j["expected_mu3"] = f.mu3;
      j["oracle"] = truth;
      if (rec.mu_exact) j["engine"] = *rec.mu_exact;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// 5: threshold-scale spot check in Z_46320 with half-dense sets.
inline CheckResult acceptance_theorem_a_spot(std::uint64_t seed, std::uint32_t sets = 20) {
  CheckResult res{"acceptance_5_theorem_a_z46320"};
  const std::uint64_t g = 46320;
  const GroupSpec G = GroupSpec::from_factors({g});
  SUMSETLAB_CHECK(G.torsion2() == 2 && g >= 624 * G.torsion2() + 1846,
                  "threshold hypothesis violated at setup");
  std::mt19937_64 rng(seed);
  for (std::uint32_t s = 0; s < sets; ++s) {
    const ElementSet A = verify_detail::random_set(rng, g, g / 2 + 1);
    const auto table = restricted_sumset_table(G, A, 10);
    std::uint64_t abar = 0;
    A.for_each([&](std::uint64_t e) { abar = G.add(abar, e); });
    bool ok = true;
    for (std::uint64_t k = 3; k <= 10 && ok; ++k) {
      ++res.instances;
      ok = table.layer(k).count() == g;
      if (ok) {
        // complement identity gives Gamma_{a-k}: Abar - Gamma_k = Abar - G
        const ElementSet high = translate(G, negate_set(G, table.layer(k)), abar);
        ok = high.count() == g;
      }
    }
    if (!ok) {
      ordered_json j;
      j["seed"] = seed;
      j["set_index"] = s;
      res.fail(j);
      return res;
    }
  }
  return res;
}

/// 6: sets in Z_1235 beyond the 5/13 density that dodge the coset
/// alternatives always have full Gamma_3.
inline CheckResult acceptance_lev_alternatives(std::uint64_t seed, std::uint32_t sets = 1000) {
  CheckResult res{"acceptance_6_lev_alternatives_z1235"};
  const std::uint64_t g = 1235;
  const GroupSpec G = GroupSpec::from_factors({g});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> size_dist(5 * g / 13 + 1, 5 * g / 13 + 40);
  for (std::uint32_t s = 0; s < sets; ++s) {
    const ElementSet A = verify_detail::random_set(rng, g, size_dist(rng));
    const auto rep = obstruction_scan(G, A, 0);
    if (rep.density_low || !rep.index2.empty() || !rep.index5.empty()) continue;  // not escaping
    ++res.instances;
    if (!rep.gamma3_full) {
      res.fail(verify_detail::instance_json(G, A));
      return res;
    }
  }
  return res;
}

/// 7: three/five consecutive lengths cover Z_3 / Z_5, exhaustively.
inline CheckResult acceptance_consecutive_cover() {
  auto res = check_consecutive_cover(12, 10);
  res.name = "acceptance_7_consecutive_cover";
  return res;
}

/// 8: constructive witnesses on 10^3 member instances.
inline CheckResult acceptance_constructive(std::uint64_t seed) {
  CheckResult res{"acceptance_8_constructive_witnesses"};
  std::mt19937_64 rng(seed);

  // pair padding in odd cyclic groups, dense sets so hypotheses mostly hold
  std::uint32_t member_instances = 0;
  std::uint32_t issued = 0;
  static const std::uint64_t odd_orders[] = {35, 45, 63, 99, 143};
  while (member_instances < 700) {
    const std::uint64_t g = odd_orders[rng() % std::size(odd_orders)];
    const GroupSpec G = GroupSpec::from_factors({g});
    std::uniform_int_distribution<std::uint64_t> size_dist(g / 2 + 1, g);
    const ElementSet A = verify_detail::random_set(rng, g, size_dist(rng));
    const std::uint64_t a = A.count();
    const std::uint32_t k = 3 + static_cast<std::uint32_t>(rng() % std::min<std::uint64_t>(a - 3, 16));
    const std::uint64_t target = rng() % g;
    const auto table = restricted_sumset_table(G, A, k);
    if (!table.layer(k).test(target)) continue;
    ++member_instances;
    ++res.instances;
    const auto r = pair_padding_represent(G, A, k, target);
    bool ok;
    if (r.ok) {
      ++issued;
      std::uint64_t sum = 0;
      ElementSet used(g);
      ok = r.witness.size() == k;
      for (std::uint64_t e : r.witness) {
        ok = ok && A.test(e) && !used.test(e);
        used.set(e);
        sum = G.add(sum, e);
      }
      ok = ok && sum == target;
    } else {
      ok = !r.failed_hypothesis.empty();
    }
    if (!ok) {
      ordered_json j = verify_detail::instance_json(G, A);
      j["k"] = k;
      j["target"] = target;
      res.fail(j);
      return res;
    }
  }

  // fiber lifting through a prime quotient p >= 7
  static const std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> lift_cases = {
      {{77}, 7}, {{91}, 7}, {{2, 44}, 11}};
  while (member_instances < 1000) {
    const auto& [factors, d] = lift_cases[rng() % lift_cases.size()];
    const GroupSpec G = GroupSpec::from_factors(factors);
    const std::uint64_t g = G.order;
    const auto quots = prime_index_subgroups(G, d);
    const auto& pi = quots[rng() % quots.size()].map;
    // dense draw, then normalize so the densest fiber sits at the kernel
    std::uniform_int_distribution<std::uint64_t> size_dist(g / 2 + 1, g - 2);
    const ElementSet raw = verify_detail::random_set(rng, g, size_dist(rng));
    const auto dec = normalize_translate(G, pi, raw);
    const ElementSet& A = dec.translated;
    const std::uint64_t a = A.count();
    const std::uint32_t k = 3 + static_cast<std::uint32_t>(rng() % std::min<std::uint64_t>(a - 3, 10));
    const std::uint64_t target = rng() % g;
    const auto table = restricted_sumset_table(G, A, k);
    if (!table.layer(k).test(target)) continue;
    ++member_instances;
    ++res.instances;
    const auto r = fiber_lift_represent(G, pi, A, k, target);
    bool ok;
    if (r.ok) {
      ++issued;
      std::uint64_t sum = 0;
      ElementSet used(g);
      ok = r.witness.size() == k;
      for (std::uint64_t e : r.witness) {
        ok = ok && A.test(e) && !used.test(e);
        used.set(e);
        sum = G.add(sum, e);
      }
      ok = ok && sum == target;
    } else {
      ok = !r.failed_hypothesis.empty();
    }
    if (!ok) {
      ordered_json j = verify_detail::instance_json(G, A);
      j["quotient"] = pi.d;
      j["k"] = k;
      j["target"] = target;
      j["failed_hypothesis"] = r.failed_hypothesis;
      res.fail(j);
      return res;
    }
  }

  // the harness must actually exercise the constructive paths
  if (issued < member_instances / 6) {
    ordered_json j;
    j["what"] = "too few witnesses issued";
    j["issued"] = issued;
    j["members"] = member_instances;
    res.fail(j);
  }
  return res;
}

/// 9: Han-Ren equivalence on 10^3 instances over primes up to 61.
inline CheckResult acceptance_mds_equivalence(std::uint64_t seed) {
  auto res = check_mds_equivalence(1000, 61, seed);
  res.name = "acceptance_9_mds_equivalence";
  return res;
}

/// 10: Hasse window for every curve over p <= 61 and the q >= 47089
/// threshold arithmetic.
inline CheckResult acceptance_hasse_audit() {
  CheckResult res{"acceptance_10_hasse_audit"};
  for (std::uint64_t p = 5; p <= 61; ++p) {
    if (!is_prime_u64(p)) continue;
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        Curve c;
        try {
          c = build_curve(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
        } catch (const ConfigError&) {
          continue;
        }
        const auto en = enumerate_points(c);  // asserts the window internally
        const std::int64_t d =
            static_cast<std::int64_t>(en.count) - static_cast<std::int64_t>(p) - 1;
        ++res.instances;
        if (d * d > static_cast<std::int64_t>(4 * p)) {
          ordered_json j;
          j["p"] = p;
          j["a"] = a;
          j["b"] = b;
          j["N"] = en.count;
          res.fail(j);
          return res;
        }
      }
  }
  // (sqrt(q) - 1)^2 >= 46656 iff q - 46655 >= 2 sqrt(q), squared exactly
  ++res.instances;
  auto sqrt_ineq = [](std::uint64_t q) {
    const std::int64_t lhs = static_cast<std::int64_t>(q) - 46655;
    return lhs >= 0 && lhs * lhs >= static_cast<std::int64_t>(4 * q);
  };
  bool arith = isqrt_u64(47089) == 217 && hasse_min_count(47089) == 46656;
  arith = arith && sqrt_ineq(47089) && !sqrt_ineq(47088);  // 217^2 is the cutoff
  for (std::uint64_t q : {47090ull, 50021ull, 1000003ull})
    arith = arith && sqrt_ineq(q) && hasse_min_count(q) >= 46656;
  if (!arith) {
    ordered_json j;
    j["what"] = "threshold arithmetic failed";
    res.fail(j);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Suite assembly.

struct VerifyOptions {
  std::string tier = "fast";
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::string tier;
  std::uint64_t seed = 0;
  bool all_passed = true;
  std::vector<CheckResult> checks;
};

inline VerifyReport verify_suite(const VerifyOptions& opt) {
  if (opt.tier != "fast" && opt.tier != "full")
    throw ConfigError("verify tier must be 'fast' or 'full'");
  VerifyReport rep;
  rep.tier = opt.tier;
  rep.seed = opt.seed;
  const std::uint64_t s = opt.seed;
  auto run = [&](CheckResult r) {
    rep.all_passed = rep.all_passed && r.passed;
    rep.checks.push_back(std::move(r));
  };

  run(check_gamma_oracle(12, 40, s ^ 0x101));
  run(check_complement_identity(24, 30, s ^ 0x102));
  run(check_layer_shape(16, 10, s ^ 0x103));
  run(check_dsh_sampled({5, 7, 11, 13, 17, 19, 23, 29, 31}, 40, s ^ 0x104));
  run(check_dgm_sampled(1500, s ^ 0x105));
  run(check_sigma_oracle(300, s ^ 0x106));
  run(check_even_rigidity(24));
  run(check_mu_small(10, s ^ 0x107));
  run(check_canonical_factors(200, s ^ 0x108));
  run(check_prime_index_subgroups(16));
  run(check_normalization(100, s ^ 0x109));
  run(check_obstruction_consistency(100, s ^ 0x10a));
  run(check_coset_intersections(32));
  run(check_consecutive_cover(9, 7));
  run(check_sigma_full(100, s ^ 0x10b));
  run(check_best_pair_sum(100, s ^ 0x10c));
  run(check_represent_soundness(150, s ^ 0x10d));
  run(check_elliptic_small(s ^ 0x10e));
  run(check_code_construction(40, s ^ 0x10f));
  run(check_mds_equivalence(120, 31, s ^ 0x110));
  run(check_serialization(s ^ 0x111));

  if (opt.tier == "full") {
    run(acceptance_gamma_oracle(s ^ 0x201));
    run(acceptance_dsh_exhaustive());
    run(acceptance_dgm_random(s ^ 0x203));
    run(acceptance_even_rigidity(s ^ 0x204));
    run(acceptance_theorem_a_spot(s ^ 0x205));
    run(acceptance_lev_alternatives(s ^ 0x206));
    run(acceptance_consecutive_cover());
    run(acceptance_constructive(s ^ 0x208));
    run(acceptance_mds_equivalence(s ^ 0x209));
    run(acceptance_hasse_audit());
  }
  return rep;
}

inline std::string verify_report_text(const VerifyReport& rep) {
  std::ostringstream out;
  out << "verification tier=" << rep.tier << " seed=" << rep.seed << "\n";
  for (const auto& c : rep.checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  (instances=" << c.instances
        << ")\n";
    if (!c.passed) out << "      counterexample: " << c.detail << "\n";
  }
  out << (rep.all_passed ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace sumsetlab
