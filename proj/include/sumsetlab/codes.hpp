#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

/// Dense row-major matrix over F_p (p supplied by the caller).
struct Matrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint64_t> a;

  Matrix() = default;
  Matrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t{r} * c, 0) {}

  std::uint64_t& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t{r} * cols + c]; }
  std::uint64_t at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t{r} * cols + c]; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline std::uint32_t rank_mod_p(Matrix m, std::uint64_t p) {
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::uint32_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, c) % p == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::uint32_t j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const std::uint64_t inv = fp::inv(m.at(rank, c), p);
    for (std::uint32_t j = c; j < m.cols; ++j) m.at(rank, j) = fp::mul(m.at(rank, j), inv, p);
    for (std::uint32_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const std::uint64_t f = m.at(r, c) % p;
      if (f == 0) continue;
      for (std::uint32_t j = c; j < m.cols; ++j)
        m.at(r, j) = fp::sub(m.at(r, j), fp::mul(f, m.at(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

/// Formal sum of curve points with integer multiplicities.
struct DivisorSpec {
  std::vector<std::pair<CurvePoint, std::int64_t>> terms;

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [pt, n] : terms) d += n;
    return d;
  }

  std::vector<CurvePoint> support() const {
    std::vector<CurvePoint> s;
    for (const auto& [pt, n] : terms)
      if (n != 0) s.push_back(pt);
    return s;
  }
};

/// Sum of [n_i]Q_i under the group law.
inline CurvePoint divisor_point(const Curve& c, const DivisorSpec& d) {
  CurvePoint acc = CurvePoint::infinity();
  for (const auto& [pt, n] : d.terms) {
    if (!on_curve(c, pt)) throw ConfigError("divisor_point: term not on the curve");
    acc = ec_add(c, acc, ec_smul(c, n, pt));
  }
  return acc;
}

/// Monomials x^i y^j with j in {0,1} and pole order 2i+3j <= k at infinity,
/// ordered by pole order.  There are exactly k of them for k >= 1.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> riemann_roch_basis(std::uint32_t k) {
  if (k < 1) throw ConfigError("riemann_roch_basis: k must be >= 1");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> basis;
  basis.emplace_back(0, 0);
  for (std::uint32_t pole = 2; pole <= k; ++pole) {
    if (pole % 2 == 0)
      basis.emplace_back(pole / 2, 0);
    else
      basis.emplace_back((pole - 3) / 2, 1);
  }
  SUMSETLAB_CHECK(basis.size() == k, "Riemann-Roch basis has wrong dimension");
  return basis;
}

/// Evaluation code C_L(D, P) with a single-point divisor D = k Q.
struct CodeInstance {
  Curve curve;
  std::vector<CurvePoint> eval_points;  // P_1..P_n, distinct, Q excluded
  CurvePoint q_point;                   // the Q of D = kQ
  std::uint32_t k = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> basis;  // (i, j) exponents
  Matrix gen;                                                  // k x n

  std::uint32_t n() const { return static_cast<std::uint32_t>(eval_points.size()); }
};

/// Functions in L(kQ) are g(. - Q) for g in L(kO); row r of the generator
/// matrix evaluates basis monomial r at P_i - Q, which is affine since Q is
/// excluded from P.
inline CodeInstance build_code(const Curve& c, const std::vector<CurvePoint>& pts,
                               const CurvePoint& q, std::uint32_t k) {
  const std::uint32_t n = static_cast<std::uint32_t>(pts.size());
  if (k < 1 || k >= n) throw ConfigError("build_code: need 0 < k < n");
  if (!on_curve(c, q)) throw ConfigError("build_code: divisor point not on the curve");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!on_curve(c, pts[i])) throw ConfigError("build_code: evaluation point not on the curve");
    if (pts[i] == q) throw ConfigError("build_code: divisor support meets the evaluation set");
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) throw ConfigError("build_code: duplicate evaluation point");
  }

  CodeInstance code;
  code.curve = c;
  code.eval_points = pts;
  code.q_point = q;
  code.k = k;
  code.basis = riemann_roch_basis(k);
  code.gen = Matrix(k, n);
  for (std::uint32_t col = 0; col < n; ++col) {
    const CurvePoint s = ec_sub(c, pts[col], q);
    SUMSETLAB_CHECK(!s.inf, "translated evaluation point is infinite");
    for (std::uint32_t row = 0; row < k; ++row) {
      const auto [xi, yj] = code.basis[row];
      std::uint64_t v = fp::pow(s.x, xi, c.p);
      if (yj) v = fp::mul(v, s.y, c.p);
      code.gen.at(row, col) = v;
    }
  }
  SUMSETLAB_CHECK(rank_mod_p(code.gen, c.p) == k, "generator matrix is rank deficient");
  return code;
}

namespace detail {

/// Lexicographic successor of a k-combination drawn from [0, n).
inline bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t n) {
  const std::uint32_t k = static_cast<std::uint32_t>(idx.size());
  std::uint32_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > (~0ull) / (n - k + i)) return ~0ull;  // saturate
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace detail

/// MDS iff every k x k minor of the generator matrix is nonsingular.
inline bool is_mds_rank(const CodeInstance& code) {
  const std::uint32_t k = code.k, n = code.n();
  std::vector<std::uint32_t> cols(k);
  for (std::uint32_t i = 0; i < k; ++i) cols[i] = i;
  do {
    Matrix minor(k, k);
    for (std::uint32_t r = 0; r < k; ++r)
      for (std::uint32_t c = 0; c < k; ++c) minor.at(r, c) = code.gen.at(r, cols[c]);
    if (rank_mod_p(std::move(minor), code.curve.p) < k) return false;
  } while (detail::next_combination(cols, n));
  return true;
}

/// MDS iff the divisor point [k]Q avoids the restricted sumset Gamma_k of the
/// evaluation set, read through the curve's discrete-log tables.
inline bool is_mds_sumset(const CodeInstance& code, const GroupIso& iso) {
  if (iso.curve != code.curve) throw ConfigError("is_mds_sumset: iso built for another curve");
  const GroupSpec& G = iso.abstract_group;
  ElementSet pset(G.order);
  for (const auto& pt : code.eval_points) pset.set(iso.fwd(pt));
  SUMSETLAB_CHECK(pset.count() == code.eval_points.size(), "evaluation points collapse under iso");
  const auto table = restricted_sumset_table(G, pset, code.k);
  const CurvePoint qd = ec_smul(code.curve, code.k, code.q_point);
  return !table.layer(code.k).test(iso.fwd(qd));
}

struct MdsVerdict {
  bool rank_mds = false;
  bool sumset_mds = false;
  bool agree = false;
};

inline MdsVerdict mds_check_dual(const CodeInstance& code, const GroupIso& iso) {
  MdsVerdict v;
  v.rank_mds = is_mds_rank(code);
  v.sumset_mds = is_mds_sumset(code, iso);
  v.agree = (v.rank_mds == v.sumset_mds);
  return v;
}

/// A (k, Q) pair certifying that an evaluation set carries an MDS code.
struct CodeFeasibility {
  std::uint32_t k = 0;
  std::uint64_t q_index = 0;  // abstract index of the divisor point Q
};

namespace detail {

/// Smallest k in [3, |P|-3], then smallest Q outside P, with [k]Q outside
/// Gamma_k(P).  Each call consumes one unit of budget.
inline std::optional<CodeFeasibility> feasible_eval_set(const GroupSpec& G,
                                                        const ElementSet& pset,
                                                        std::uint64_t& budget) {
  if (budget == 0) throw BudgetExhausted("mds search budget exhausted");
  --budget;
  const std::uint64_t sz = pset.count();
  if (sz < 6) return std::nullopt;
  const std::uint32_t kmax = static_cast<std::uint32_t>(sz) - 3;
  const auto table = restricted_sumset_table(G, pset, kmax);
  for (std::uint32_t k = 3; k <= kmax; ++k) {
    const ElementSet& layer = table.layer(k);
    if (layer.count() == G.order) continue;
    for (std::uint64_t q = 0; q < G.order; ++q) {
      if (pset.test(q)) continue;
      if (!layer.test(G.smul(static_cast<std::int64_t>(k), q))) return CodeFeasibility{k, q};
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct MdsSearchRecord {
  std::uint64_t q = 0;  // field size
  std::uint64_t a = 0, b = 0;
  std::uint64_t N = 0;  // |E(F_q)|
  std::string group_name;
  std::vector<std::uint64_t> best;  // abstract indices of the evaluation set
  std::uint32_t k = 0;
  std::uint64_t q_index = 0;
  std::string method = "none";  // "both" / "sumset"; "none" when no feasible set exists
  bool certified = false;    // exhaustive over subsets (N <= 12 only)
  bool budget_exhausted = false;
  std::int64_t gap_half_x2 = 0;  // N - 2|P|
  std::int64_t gap_conj_x2 = 0;  // (N + 5) - 2|P|
};

namespace detail {

inline void finalize_record(const GroupIso& iso, MdsSearchRecord& rec,
                            const std::vector<std::uint64_t>& best,
                            const CodeFeasibility& fw) {
  rec.best = best;
  rec.k = fw.k;
  rec.q_index = fw.q_index;
  rec.gap_half_x2 = static_cast<std::int64_t>(rec.N) - 2 * static_cast<std::int64_t>(best.size());
  rec.gap_conj_x2 = rec.gap_half_x2 + 5;

  // re-verify through both checkers unless the minor sweep is too large
  std::vector<CurvePoint> pts;
  for (std::uint64_t idx : best) pts.push_back(iso.back(idx));
  const CodeInstance code = build_code(iso.curve, pts, iso.back(fw.q_index), fw.k);
  SUMSETLAB_CHECK(is_mds_sumset(code, iso), "recorded evaluation set fails the sumset check");
  const std::uint64_t minors = binomial(best.size(), fw.k);
  const std::uint64_t cost_cap = 20'000'000;
  const std::uint64_t per_minor = std::uint64_t{fw.k} * fw.k * fw.k;
  if (minors <= cost_cap / std::max<std::uint64_t>(per_minor, 1)) {
    SUMSETLAB_CHECK(is_mds_rank(code), "recorded evaluation set fails the minor-rank check");
    rec.method = "both";
  } else {
    rec.method = "sumset";
  }
}

}  // namespace detail

/// Heuristic search for a largest evaluation set P on one curve such that some
/// k in [3, |P|-3] yields an MDS code.  Greedy growth from random starts plus
/// index-2 coset seeds, then single-swap local search.  Exhaustive (certified)
/// when N <= 12.
inline MdsSearchRecord mds_search_curve(const GroupIso& iso, std::uint64_t seed,
                                        std::uint64_t budget) {
  const GroupSpec& G = iso.abstract_group;
  const std::uint64_t N = G.order;
  MdsSearchRecord rec;
  rec.q = iso.curve.p;
  rec.a = iso.curve.a;
  rec.b = iso.curve.b;
  rec.N = N;
  rec.group_name = G.name();

  std::vector<std::uint64_t> best;
  CodeFeasibility best_fw;
  auto as_set = [&](const std::vector<std::uint64_t>& v) {
    ElementSet s(N);
    for (std::uint64_t e : v) s.set(e);
    return s;
  };

  try {
    if (N <= 12) {
      // exhaustive: scan sizes descending, all subsets of each size
      for (std::uint64_t sz = N - 1; sz >= 6 && best.empty(); --sz) {
        std::vector<std::uint32_t> comb(sz);
        for (std::uint32_t i = 0; i < sz; ++i) comb[i] = i;
        do {
          std::vector<std::uint64_t> cand(comb.begin(), comb.end());
          if (auto fw = detail::feasible_eval_set(G, as_set(cand), budget)) {
            best = cand;
            best_fw = *fw;
            break;
          }
        } while (detail::next_combination(comb, static_cast<std::uint32_t>(N)));
      }
      rec.certified = true;
    } else {
      std::mt19937_64 rng(seed);

      // seed 1: a full coset of an index-2 subgroup, when the order is even
      if (N % 2 == 0) {
        for (const auto& piq : prime_index_subgroups(G, 2)) {
          for (const ElementSet& coset : piq.map.cosets()) {
            if (auto fw = detail::feasible_eval_set(G, coset, budget)) {
              auto cand = coset.to_indices();
              if (cand.size() > best.size()) {
                best = cand;
                best_fw = *fw;
              }
            }
          }
        }
      }

      // seed 2: greedy growth from random feasible 6-subsets
      std::vector<std::uint64_t> all(N);
      for (std::uint64_t i = 0; i < N; ++i) all[i] = i;
      for (int restart = 0; restart < 4; ++restart) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::uint64_t> cur;
        std::optional<CodeFeasibility> cur_fw;
        std::size_t scan = 0;
        for (; scan < all.size() && !cur_fw; ++scan) {
          if (cur.size() < 6) {
            cur.push_back(all[scan]);
            if (cur.size() == 6) {
              cur_fw = detail::feasible_eval_set(G, as_set(cur), budget);
              if (!cur_fw) cur.clear();
            }
          }
        }
        if (!cur_fw) continue;
        bool grew = true;
        while (grew) {
          grew = false;
          for (std::uint64_t cand : all) {
            if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
            cur.push_back(cand);
            if (auto fw = detail::feasible_eval_set(G, as_set(cur), budget)) {
              cur_fw = fw;
              grew = true;
            } else {
              cur.pop_back();
            }
          }
          // single-swap escape: trade one member for one outsider, then retry
          if (!grew && cur.size() > 6) {
            bool swapped = false;
            for (std::size_t ri = 0; ri < cur.size() && !swapped; ++ri) {
              for (std::uint64_t in : all) {
                if (std::find(cur.begin(), cur.end(), in) != cur.end()) continue;
                std::vector<std::uint64_t> alt = cur;
                alt[ri] = in;
                ElementSet alt_set = as_set(alt);
                bool extended = false;
                for (std::uint64_t extra : all) {
                  if (alt_set.test(extra)) continue;
                  alt_set.set(extra);
                  if (auto fw = detail::feasible_eval_set(G, alt_set, budget)) {
                    alt.push_back(extra);
                    cur = alt;
                    cur_fw = fw;
                    extended = true;
                    break;
                  }
                  alt_set.reset(extra);
                }
                if (extended) {
                  swapped = true;
                  grew = true;
                  break;
                }
              }
            }
          }
        }
        if (cur.size() > best.size()) {
          std::sort(cur.begin(), cur.end());
          best = cur;
          best_fw = *cur_fw;
        }
      }
    }
  } catch (const BudgetExhausted&) {
    rec.budget_exhausted = true;
  }

  if (!best.empty()) detail::finalize_record(iso, rec, best, best_fw);
  return rec;
}

struct MdsSearchConfig {
  std::uint64_t p_lo = 5;
  std::uint64_t p_hi = 61;
  std::uint32_t curves_per_prime = 2;
  std::uint64_t seed = 0;
  std::uint64_t per_curve_budget = 50'000;
};

/// Sweep primes in [p_lo, p_hi], sampling nonsingular curves per prime.
inline std::vector<MdsSearchRecord> mds_search(const MdsSearchConfig& cfg) {
  if (cfg.p_lo < 5 || cfg.p_hi < cfg.p_lo) throw ConfigError("mds_search: bad prime range");
  if (cfg.p_hi > 500) throw ConfigError("mds_search: prime range cap exceeded");
  std::vector<MdsSearchRecord> out;
  std::mt19937_64 rng(cfg.seed);
  for (std::uint64_t p = cfg.p_lo; p <= cfg.p_hi; ++p) {
    if (!is_prime_u64(p)) continue;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::uint32_t made = 0;
    while (made < cfg.curves_per_prime && seen.size() < p * p) {
      const std::uint64_t a = dist(rng), b = dist(rng);
      if (std::find(seen.begin(), seen.end(), std::make_pair(a, b)) != seen.end()) continue;
      seen.push_back({a, b});
      Curve c;
      try {
        c = build_curve(p, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
      } catch (const ConfigError&) {
        continue;  // singular draw, resample
      }
      const GroupIso iso = group_structure_iso(c);
      out.push_back(mds_search_curve(iso, cfg.seed + p * 1000 + made, cfg.per_curve_budget));
      ++made;
    }
  }
  return out;
}

}  // namespace sumsetlab
