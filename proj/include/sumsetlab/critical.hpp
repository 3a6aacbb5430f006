#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
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

// ---------------------------------------------------------------------------
// Predicted critical numbers from the covering theorems.  Hypotheses are
// always evaluated, never assumed; a bound value is reported even when the
// size thresholds fail, but it is only "predicted" once every hypothesis
// holds.

struct TheoremPrediction {
  std::uint64_t g = 0;
  std::uint64_t k = 0;
  std::uint64_t p_min = 0;
  std::uint64_t torsion2 = 0;
  bool g_even = false;
  bool k_in_range = false;  // 3 <= k <= g/p_min - 2
  std::vector<std::pair<std::string, bool>> thresholds;
  std::string branch;                           // bound family that applies
  std::optional<std::uint64_t> formula_value;   // bound formula, hypotheses aside
  bool exact = false;                           // value is an exact mu, not just an upper bound
  bool asserted = false;                        // all hypotheses of the branch hold
  std::optional<std::uint64_t> predicted;       // formula_value when asserted
  std::string reason;                           // why no prediction, when absent
};

inline std::uint64_t floor_cg(std::uint64_t g) {
  // c(g) = 2/5 when 5 | g, else 5/13; exact rational floor
  return (g % 5 == 0) ? 2 * g / 5 : 5 * g / 13;
}

inline TheoremPrediction predict_critical_number(const GroupSpec& G, std::uint64_t k) {
  TheoremPrediction out;
  out.g = G.order;
  out.k = k;
  out.p_min = G.smallest_prime();
  out.torsion2 = G.torsion2();
  out.g_even = G.order % 2 == 0;
  const std::uint64_t g = G.order;
  const std::uint64_t even_threshold = 624 * out.torsion2 + 1846;
  out.thresholds = {
      {"even_g_ge_624t2_1846", g >= even_threshold},
      {"half_dense_p3_g_ge_3705", g >= 3705},
      {"half_dense_p5_g_ge_6175", g >= 6175},
      {"half_dense_p7_g_ge_46319", g >= 46319},
      {"odd_p3_g_ge_138957", g >= 138957},
      {"odd_p5_g_ge_6175", g >= 6175},
      {"odd_g_ge_1235", g >= 1235},
  };
  auto flag = [&](const char* name) {
    for (const auto& [n, v] : out.thresholds)
      if (n == name) return v;
    throw InternalError("unknown threshold flag");
  };

  out.k_in_range = k >= 3 && g / out.p_min >= 2 && k <= g / out.p_min - 2;
  if (!out.k_in_range) {
    out.reason = "k outside the range [3, g/p - 2]";
    return out;
  }

  if (out.g_even) {
    out.branch = "even_exact";
    out.formula_value = g / 2 + 1;
    out.exact = true;
    out.asserted = flag("even_g_ge_624t2_1846");
    if (out.asserted)
      out.predicted = out.formula_value;
    else
      out.reason = "even-order size threshold unmet";
    return out;
  }

  struct Candidate {
    std::string name;
    std::uint64_t value;
    bool hyp_ok;
  };
  std::vector<Candidate> cands;
  const std::uint64_t cg = floor_cg(g);
  if (k == 4) cands.push_back({"odd_k4", cg + 2, flag("odd_g_ge_1235")});
  if (k == 5) cands.push_back({"odd_k5", cg + 3, flag("odd_g_ge_1235")});
  if (out.p_min == 3 && k >= 6) cands.push_back({"odd_p3", cg + 9, flag("odd_p3_g_ge_138957")});
  if (out.p_min == 5 && k >= 5) cands.push_back({"odd_p5", cg + 21, flag("odd_p5_g_ge_6175")});
  if (out.p_min >= 7) cands.push_back({"odd_p7", 5 * g / 13 + 3, flag("odd_g_ge_1235")});

  if (cands.empty()) {
    out.reason = "no bound covers this k for p(G) = " + std::to_string(out.p_min);
    return out;
  }
  const Candidate* best_any = nullptr;
  const Candidate* best_ok = nullptr;
  for (const auto& c : cands) {
    if (!best_any || c.value < best_any->value) best_any = &c;
    if (c.hyp_ok && (!best_ok || c.value < best_ok->value)) best_ok = &c;
  }
  if (best_ok) {
    out.branch = best_ok->name;
    out.formula_value = best_ok->value;
    out.asserted = true;
    out.predicted = best_ok->value;
  } else {
    out.branch = best_any->name;
    out.formula_value = best_any->value;
    out.asserted = false;
    out.reason = "size threshold unmet";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive search for the largest set with Gamma_k != G.

namespace detail {

/// Bit-word group arithmetic for g <= 64: layers fit in single words.
struct PackedGroup {
  std::uint64_t g = 0;
  std::uint64_t mask = 0;
  bool cyclic = false;
  std::vector<std::uint8_t> add_tab;  // row-major add table when not cyclic

  explicit PackedGroup(const GroupSpec& G) : g(G.order), cyclic(G.rank() == 1) {
    SUMSETLAB_CHECK(g <= 64, "PackedGroup: order exceeds 64");
    mask = (g == 64) ? ~0ull : ((1ull << g) - 1);
    if (!cyclic) {
      add_tab.resize(g * g);
      for (std::uint64_t a = 0; a < g; ++a)
        for (std::uint64_t b = 0; b < g; ++b)
          add_tab[a * g + b] = static_cast<std::uint8_t>(G.add(a, b));
    }
  }

  std::uint64_t translate(std::uint64_t w, std::uint64_t e) const {
    if (e == 0) return w;
    if (cyclic) return ((w << e) | (w >> (g - e))) & mask;
    std::uint64_t out = 0;
    const std::uint8_t* row = add_tab.data();
    while (w) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(w));
      out |= 1ull << row[static_cast<std::uint64_t>(i) * g + e];
      w &= w - 1;
    }
    return out;
  }
};

inline bool covers_packed(const PackedGroup& pg, const std::vector<std::uint64_t>& elems,
                          std::uint32_t k, std::uint64_t* missing_out = nullptr) {
  std::vector<std::uint64_t> layers(k + 1, 0);
  layers[0] = 1;  // {0}
  for (std::uint64_t e : elems) {
    for (std::uint32_t kk = k; kk >= 1; --kk) {
      if (!layers[kk - 1]) continue;
      layers[kk] |= pg.translate(layers[kk - 1], e);
    }
    if (layers[k] == pg.mask) return true;
  }
  if (layers[k] == pg.mask) return true;
  if (missing_out) {
    const std::uint64_t inv = ~layers[k] & pg.mask;
    *missing_out = static_cast<std::uint64_t>(std::countr_zero(inv));
  }
  return false;
}

inline bool covers_generic(const GroupSpec& G, const std::vector<std::uint64_t>& elems,
                           std::uint32_t k, std::uint64_t* missing_out = nullptr) {
  std::vector<ElementSet> layers(k + 1, ElementSet(G.order));
  layers[0].set(0);
  ElementSet scratch(G.order);
  for (std::uint64_t e : elems) {
    for (std::uint32_t kk = k; kk >= 1; --kk) {
      if (layers[kk - 1].empty()) continue;
      scratch.clear();
      translate_or_into(G, layers[kk - 1], e, scratch);
      layers[kk] |= scratch;
    }
    if (layers[k].is_full()) return true;
  }
  if (layers[k].is_full()) return true;
  if (missing_out) *missing_out = *layers[k].first_missing();
  return false;
}

}  // namespace detail

struct NoncoverSearch {
  std::optional<ElementSet> witness;  // a largest set with Gamma_k != G, if found
  std::uint64_t witness_size = 0;
  std::optional<std::uint64_t> missed;  // element absent from Gamma_k(witness)
  bool certified = false;               // every larger size was exhausted
  std::uint64_t nodes = 0;
  std::uint64_t abandoned_at_size = 0;  // size being scanned when budget ran out
};

/// Descending-size exhaustive search.  Coverage is translation invariant, so
/// only subsets containing 0 are enumerated; structured candidates (prime
/// index cosets and two-coset unions) are tried first at each size.
inline NoncoverSearch max_noncovering_set(const GroupSpec& G, std::uint32_t k,
                                          std::uint64_t node_budget = 4'000'000) {
  const std::uint64_t g = G.order;
  if (k < 1 || k > g) throw ConfigError("max_noncovering_set: need 1 <= k <= g");

  std::optional<detail::PackedGroup> pg;
  if (g <= 64) pg.emplace(G);
  NoncoverSearch out;

  auto covers = [&](const std::vector<std::uint64_t>& elems, std::uint64_t* missing) {
    return pg ? detail::covers_packed(*pg, elems, k, missing)
              : detail::covers_generic(G, elems, k, missing);
  };

  // structured seeds, grouped by size
  std::map<std::uint64_t, std::vector<ElementSet>, std::greater<>> seeds;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    if (g % d != 0 || g == d) continue;
    for (const auto& q : prime_index_subgroups(G, d)) {
      const auto cosets = q.map.cosets();
      for (const auto& c : cosets) seeds[g / d].push_back(c);
      if (d > 2) {
        for (std::uint64_t i = 0; i < d; ++i)
          for (std::uint64_t j = i + 1; j < d; ++j) {
            ElementSet uni = cosets[i];
            uni |= cosets[j];
            seeds[2 * g / d].push_back(uni);
          }
      }
    }
  }

  for (std::uint64_t m = g; m >= k; --m) {
    // seeds of this size first
    if (auto it = seeds.find(m); it != seeds.end()) {
      for (const auto& s : it->second) {
        if (out.nodes >= node_budget) {
          out.abandoned_at_size = m;
          return out;
        }
        ++out.nodes;
        std::uint64_t missing = 0;
        if (!covers(s.to_indices(), &missing)) {
          out.witness = s;
          out.witness_size = m;
          out.missed = missing;
          out.certified = true;
          return out;
        }
      }
    }
    // all m-subsets containing 0, in lexicographic order
    std::vector<std::uint64_t> elems(m);
    elems[0] = 0;
    std::vector<std::uint64_t> c(m - 1);
    for (std::uint64_t i = 0; i + 1 < m; ++i) c[i] = i + 1;
    bool more = true;
    while (more) {
      if (out.nodes >= node_budget) {
        out.abandoned_at_size = m;
        return out;
      }
      ++out.nodes;
      for (std::uint64_t i = 0; i + 1 < m; ++i) elems[i + 1] = c[i];
      std::uint64_t missing = 0;
      if (!covers(elems, &missing)) {
        out.witness = ElementSet::from_indices(g, elems);
        out.witness_size = m;
        out.missed = missing;
        out.certified = true;
        return out;
      }
      // advance the combination odometer over {1..g-1}
      more = false;
      for (std::uint64_t i = m - 1; i-- > 0;) {
        if (c[i] + (m - 1 - i) < g) {
          ++c[i];
          for (std::uint64_t j = i + 1; j + 1 < m; ++j) c[j] = c[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }
  // no non-covering set of any size >= k exists
  out.certified = true;
  out.witness_size = k - 1;  // sentinel: mu = k
  return out;
}

// ---------------------------------------------------------------------------

/// Direct verification of the index-2 barrier: Gamma_k of an index-2 subgroup
/// H stays inside H, so mu_k >= g/2 + 1.  Returns the bound and H when the
/// range applies and the containment was checked by DP.
inline std::optional<std::pair<std::uint64_t, ElementSet>> even_lower_bound(
    const GroupSpec& G, std::uint32_t k) {
  const std::uint64_t g = G.order;
  if (g % 2 != 0 || g > (1u << 16)) return std::nullopt;
  if (k < 3 || g / 2 < 2 || k > g / 2 - 2) return std::nullopt;
  const auto quotients = prime_index_subgroups(G, 2);
  SUMSETLAB_CHECK(!quotients.empty(), "even group without index-2 subgroup");
  const ElementSet& H = quotients.front().subgroup.members;
  const auto table = restricted_sumset_table(G, H, k);
  SUMSETLAB_CHECK(table.layers[k].subset_of(H), "Gamma_k(H) escaped H");
  SUMSETLAB_CHECK(!table.layers[k].is_full(), "Gamma_k(H) unexpectedly full");
  return std::make_pair(g / 2 + 1, H);
}

struct CriticalRecord {
  GroupSpec group;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> mu_exact;
  std::uint64_t mu_lower = 0;
  std::uint64_t mu_upper = 0;
  std::optional<ElementSet> witness;
  std::optional<std::uint64_t> missed;
  bool certified = false;
  std::uint64_t nodes = 0;
  TheoremPrediction prediction;
  std::optional<std::uint64_t> index2_lower;  // g/2+1 barrier when verified
};

inline CriticalRecord mu_k_exact(const GroupSpec& G, std::uint32_t k,
                                 std::uint64_t node_budget = 4'000'000) {
  CriticalRecord rec;
  rec.group = G;
  rec.k = k;
  rec.prediction = predict_critical_number(G, k);
  const auto search = max_noncovering_set(G, k, node_budget);
  rec.nodes = search.nodes;
  rec.certified = search.certified;
  if (search.certified) {
    rec.mu_exact = search.witness_size + 1;
    rec.mu_lower = rec.mu_upper = *rec.mu_exact;
    rec.witness = search.witness;
    rec.missed = search.missed;
  } else {
    rec.mu_lower = k + 1;  // k-element sets reach a single sum only
    rec.mu_upper = search.abandoned_at_size + 1;  // larger sizes all cover
    rec.witness = search.witness;
    rec.missed = search.missed;
  }
  if (auto lb = even_lower_bound(G, k)) {
    rec.index2_lower = lb->first;
    rec.mu_lower = std::max(rec.mu_lower, lb->first);
    if (!rec.witness) {
      rec.witness = lb->second;
    }
  }
  if (rec.prediction.asserted && rec.prediction.predicted) {
    if (rec.certified) {
      if (rec.prediction.exact)
        SUMSETLAB_CHECK(*rec.mu_exact == *rec.prediction.predicted,
                        "certified mu disagrees with the exact even-order value");
      else
        SUMSETLAB_CHECK(*rec.mu_exact <= *rec.prediction.predicted,
                        "certified mu exceeds an asserted upper bound");
    } else {
      rec.mu_upper = std::min(rec.mu_upper, *rec.prediction.predicted);
    }
  }
  SUMSETLAB_CHECK(rec.mu_lower <= rec.mu_upper, "critical bounds crossed");
  return rec;
}

/// Batch atlas over an order range.  Exact search runs for g <= exact_cap;
/// larger orders report [lower, upper] intervals only.
inline std::vector<CriticalRecord> dichotomy_table(std::uint64_t min_order,
                                                   std::uint64_t max_order, std::uint64_t k_min,
                                                   std::uint64_t k_max,
                                                   std::uint64_t node_budget = 4'000'000,
                                                   std::uint64_t exact_cap = 20) {
  if (min_order < 2 || min_order > max_order)
    throw ConfigError("dichotomy_table: bad order range");
  if (k_min < 1 || k_min > k_max) throw ConfigError("dichotomy_table: bad k range");
  std::vector<CriticalRecord> out;
  for (std::uint64_t n = min_order; n <= max_order; ++n) {
    for (const auto& factors : abelian_group_types(n)) {
      // invariant-factor coordinates, so records carry canonical names
      const GroupSpec G =
          GroupSpec::from_factors(GroupSpec::from_factors(factors).canonical_factors());
      for (std::uint64_t k = k_min; k <= std::min(k_max, n); ++k) {
        if (n <= exact_cap) {
          out.push_back(mu_k_exact(G, static_cast<std::uint32_t>(k), node_budget));
        } else {
          CriticalRecord rec;
          rec.group = G;
          rec.k = k;
          rec.prediction = predict_critical_number(G, k);
          rec.certified = false;
          rec.mu_lower = k + 1;
          rec.mu_upper = n + 1;
          if (auto lb = even_lower_bound(G, static_cast<std::uint32_t>(k))) {
            rec.index2_lower = lb->first;
            rec.mu_lower = std::max(rec.mu_lower, lb->first);
            rec.witness = lb->second;
          }
          if (rec.prediction.asserted && rec.prediction.predicted)
            rec.mu_upper = std::min(rec.mu_upper, *rec.prediction.predicted);
          SUMSETLAB_CHECK(rec.mu_lower <= rec.mu_upper, "critical bounds crossed");
          out.push_back(std::move(rec));
        }
      }
    }
  }
  return out;
}

}  // namespace sumsetlab
