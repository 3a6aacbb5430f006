#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "sumsetlab/common.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p <= 2^31 keeps the product in range
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  SUMSETLAB_CHECK(a % p != 0, "field inverse of zero");
  return pow(a, p - 2, p);
}

}  // namespace fp

/// Short Weierstrass curve y^2 = x^3 + ax + b over F_p, p >= 5 prime,
/// nonsingular (4a^3 + 27b^2 != 0).
struct Curve {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  bool operator==(const Curve& o) const { return p == o.p && a == o.a && b == o.b; }
  bool operator!=(const Curve& o) const { return !(*this == o); }
};

inline Curve build_curve(std::uint64_t p, std::int64_t a_in, std::int64_t b_in) {
  if (p < 5 || !is_prime_u64(p)) throw ConfigError("build_curve: p must be a prime >= 5");
  if (p > (1u << 31)) throw ConfigError("build_curve: p too large");
  auto norm = [&](std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m);
  };
  Curve c{p, norm(a_in), norm(b_in)};
  const std::uint64_t disc =
      fp::add(fp::mul(4, fp::mul(c.a, fp::mul(c.a, c.a, p), p), p),
              fp::mul(27, fp::mul(c.b, c.b, p), p), p);
  if (disc == 0) throw ConfigError("build_curve: singular curve (4a^3 + 27b^2 = 0)");
  return c;
}

/// Affine point or the point at infinity.
struct CurvePoint {
  bool inf = true;
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  static CurvePoint infinity() { return CurvePoint{}; }
  static CurvePoint affine(std::uint64_t x, std::uint64_t y) { return CurvePoint{false, x, y}; }

  bool operator==(const CurvePoint& o) const {
    return inf == o.inf && (inf || (x == o.x && y == o.y));
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }

  std::string to_string() const {
    if (inf) return "inf";
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

inline bool on_curve(const Curve& c, const CurvePoint& pt) {
  if (pt.inf) return true;
  if (pt.x >= c.p || pt.y >= c.p) return false;
  const std::uint64_t lhs = fp::mul(pt.y, pt.y, c.p);
  const std::uint64_t rhs =
      fp::add(fp::add(fp::mul(pt.x, fp::mul(pt.x, pt.x, c.p), c.p),
                      fp::mul(c.a, pt.x, c.p), c.p),
              c.b, c.p);
  return lhs == rhs;
}

inline CurvePoint ec_neg(const Curve& c, const CurvePoint& pt) {
  if (pt.inf) return pt;
  return CurvePoint::affine(pt.x, pt.y == 0 ? 0 : c.p - pt.y);
}

/// Chord-tangent addition in affine coordinates.
inline CurvePoint ec_add(const Curve& c, const CurvePoint& P, const CurvePoint& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const std::uint64_t p = c.p;
  if (P.x == Q.x && fp::add(P.y, Q.y, p) == 0) return CurvePoint::infinity();
  std::uint64_t lambda;
  if (P.x == Q.x) {
    // doubling; P.y != 0 here since the vertical case is handled above
    const std::uint64_t num = fp::add(fp::mul(3, fp::mul(P.x, P.x, p), p), c.a, p);
    lambda = fp::mul(num, fp::inv(fp::mul(2, P.y, p), p), p);
  } else {
    lambda = fp::mul(fp::sub(Q.y, P.y, p), fp::inv(fp::sub(Q.x, P.x, p), p), p);
  }
  const std::uint64_t x3 = fp::sub(fp::sub(fp::mul(lambda, lambda, p), P.x, p), Q.x, p);
  const std::uint64_t y3 = fp::sub(fp::mul(lambda, fp::sub(P.x, x3, p), p), P.y, p);
  return CurvePoint::affine(x3, y3);
}

inline CurvePoint ec_sub(const Curve& c, const CurvePoint& P, const CurvePoint& Q) {
  return ec_add(c, P, ec_neg(c, Q));
}

inline CurvePoint ec_smul(const Curve& c, std::int64_t m, CurvePoint P) {
  if (m < 0) {
    P = ec_neg(c, P);
    m = -m;
  }
  CurvePoint acc = CurvePoint::infinity();
  std::uint64_t e = static_cast<std::uint64_t>(m);
  while (e) {
    if (e & 1) acc = ec_add(c, acc, P);
    P = ec_add(c, P, P);
    e >>= 1;
  }
  return acc;
}

/// All rational points via an x-sweep with a square-root table.  The count is
/// checked against the Hasse window |N - (p+1)| <= 2 sqrt(p) exactly.
struct PointEnumeration {
  std::vector<CurvePoint> points;  // infinity first, then by (x, y)
  std::uint64_t count = 0;
};

inline PointEnumeration enumerate_points(const Curve& c, std::uint64_t p_cap = 10000) {
  if (c.p > p_cap) throw ConfigError("enumerate_points: p exceeds enumeration cap");
  const std::uint64_t p = c.p;
  // sqrt table: root[s] = some y with y^2 = s, else p
  std::vector<std::uint64_t> root(p, p);
  for (std::uint64_t y = 0; y <= p / 2; ++y) root[fp::mul(y, y, p)] = y;
  PointEnumeration out;
  out.points.push_back(CurvePoint::infinity());
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs =
        fp::add(fp::add(fp::mul(x, fp::mul(x, x, p), p), fp::mul(c.a, x, p), p), c.b, p);
    const std::uint64_t y = root[rhs];
    if (y == p) continue;
    if (y == 0) {
      out.points.push_back(CurvePoint::affine(x, 0));
    } else {
      out.points.push_back(CurvePoint::affine(x, y));
      out.points.push_back(CurvePoint::affine(x, p - y));
    }
  }
  out.count = out.points.size();
  // Hasse window, exact integer arithmetic: (N - p - 1)^2 <= 4p
  const std::int64_t d = static_cast<std::int64_t>(out.count) - static_cast<std::int64_t>(p) - 1;
  SUMSETLAB_CHECK(d * d <= static_cast<std::int64_t>(4 * p), "point count violates the Hasse window");
  return out;
}

/// Least point count the Hasse window allows: ceil(q + 1 - 2 sqrt(q)).
inline std::uint64_t hasse_min_count(std::uint64_t q) {
  return q + 1 - isqrt_u64(4 * q);
}

/// Grammar: p=<prime>,a=<int>,b=<int> (keys in any order, all required).
inline Curve parse_curve(const std::string& s) {
  std::optional<std::uint64_t> p;
  std::optional<std::int64_t> a, b;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string part = s.substr(pos, comma - pos);
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("curve spec: expected key=value, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    try {
      if (key == "p")
        p = std::stoull(val);
      else if (key == "a")
        a = std::stoll(val);
      else if (key == "b")
        b = std::stoll(val);
      else
        throw ConfigError("curve spec: unknown key '" + key + "'");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("curve spec: bad integer '" + val + "'");
    }
    pos = comma + 1;
  }
  if (!p || !a || !b) throw ConfigError("curve spec: need p=<prime>,a=<int>,b=<int>");
  return build_curve(*p, *a, *b);
}

/// Grammar: `inf` or `(x,y)`; membership on `c` is validated.
inline CurvePoint parse_point(const Curve& c, const std::string& s) {
  if (s == "inf" || s == "O") return CurvePoint::infinity();
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw ConfigError("point: expected 'inf' or '(x,y)', got '" + s + "'");
  const std::string body = s.substr(1, s.size() - 2);
  const std::size_t comma = body.find(',');
  if (comma == std::string::npos) throw ConfigError("point: expected '(x,y)'");
  std::int64_t x, y;
  try {
    x = std::stoll(body.substr(0, comma));
    y = std::stoll(body.substr(comma + 1));
  } catch (const std::exception&) {
    throw ConfigError("point: bad coordinate in '" + s + "'");
  }
  auto norm = [&](std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(c.p);
    if (m < 0) m += static_cast<std::int64_t>(c.p);
    return static_cast<std::uint64_t>(m);
  };
  const CurvePoint pt = CurvePoint::affine(norm(x), norm(y));
  if (!on_curve(c, pt)) throw ConfigError("point " + s + " is not on the curve");
  return pt;
}

namespace detail {

inline std::uint64_t point_key(const CurvePoint& pt) {
  if (pt.inf) return ~0ull;
  return (pt.x << 32) | pt.y;
}

inline std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    ds.push_back(d);
    if (d != n / d) ds.push_back(n / d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline std::uint64_t point_order(const Curve& c, const CurvePoint& P, std::uint64_t n) {
  for (std::uint64_t d : sorted_divisors(n))
    if (ec_smul(c, static_cast<std::int64_t>(d), P).inf) return d;
  throw InternalError("point order does not divide the group order");
}

}  // namespace detail

/// Explicit isomorphism E(F_p) -> Z_m x Z_n with m | n, built from a
/// generator of maximal order and a second generator of coset order m, with
/// full discrete-log tables both ways.
struct GroupIso {
  Curve curve;
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  GroupSpec abstract_group;              // Z_n when m = 1, else Z_m x Z_n
  CurvePoint gen_n;                      // order n
  CurvePoint gen_m;                      // coset order m (infinity when m = 1)
  std::vector<CurvePoint> back_table;    // abstract index -> point
  std::unordered_map<std::uint64_t, std::uint64_t> fwd_table;  // point key -> index

  std::uint64_t fwd(const CurvePoint& pt) const {
    auto it = fwd_table.find(detail::point_key(pt));
    if (it == fwd_table.end()) throw ConfigError("GroupIso::fwd: point not on the curve");
    return it->second;
  }

  const CurvePoint& back(std::uint64_t idx) const {
    if (idx >= back_table.size()) throw ConfigError("GroupIso::back: index out of range");
    return back_table[idx];
  }
};

inline GroupIso group_structure_iso(const Curve& c, std::uint64_t p_cap = 10000) {
  const auto en = enumerate_points(c, p_cap);
  const std::uint64_t N = en.count;
  GroupIso iso;
  iso.curve = c;

  // exponent n = lcm of point orders; orders are only computed for points
  // that strictly enlarge the running lcm, the rest pass a single smul test
  std::uint64_t n = 1;
  for (const auto& P : en.points)
    if (!ec_smul(c, static_cast<std::int64_t>(n), P).inf)
      n = std::lcm(n, detail::point_order(c, P, N));
  CurvePoint Q1 = CurvePoint::infinity();
  for (const auto& P : en.points)
    if (detail::point_order(c, P, N) == n) {
      Q1 = P;
      break;
    }
  SUMSETLAB_CHECK(!(n > 1 && Q1.inf), "no point of maximal order found");
  const std::uint64_t m = N / n;
  SUMSETLAB_CHECK(m * n == N && n % m == 0, "group structure is not Z_m x Z_n with m | n");
  iso.m = m;
  iso.n = n;
  iso.gen_n = Q1;

  // members of <Q1> for coset-order tests
  std::unordered_map<std::uint64_t, std::uint64_t> cyc;  // key -> exponent i
  {
    CurvePoint acc = CurvePoint::infinity();
    for (std::uint64_t i = 0; i < n; ++i) {
      cyc[detail::point_key(acc)] = i;
      acc = ec_add(c, acc, Q1);
    }
  }

  CurvePoint Q2 = CurvePoint::infinity();
  if (m > 1) {
    for (const auto& R : en.points) {
      // coset order of R modulo <Q1> must be exactly m
      std::uint64_t j = 1;
      CurvePoint acc = R;
      while (!cyc.count(detail::point_key(acc))) {
        acc = ec_add(c, acc, R);
        ++j;
      }
      if (j == m) {
        Q2 = R;
        break;
      }
    }
    SUMSETLAB_CHECK(!Q2.inf, "no independent generator of coset order m");
    // coset order m only gives m*Q2 in <Q1>; subtract (t/m)*Q1 so the actual
    // order becomes m and the pair defines a homomorphism
    const CurvePoint T = ec_smul(c, static_cast<std::int64_t>(m), Q2);
    const std::uint64_t t = cyc.at(detail::point_key(T));
    SUMSETLAB_CHECK(t % m == 0, "coset generator cannot be straightened");
    Q2 = ec_sub(c, Q2, ec_smul(c, static_cast<std::int64_t>(t / m), Q1));
    SUMSETLAB_CHECK(ec_smul(c, static_cast<std::int64_t>(m), Q2).inf,
                    "straightened generator does not have order m");
  }
  iso.gen_m = Q2;
  iso.abstract_group = (m == 1) ? GroupSpec::from_factors({n})
                                : GroupSpec::from_factors({m, n});

  // dlog tables: abstract (j, i) with index j + m*i  ->  j*Q2 + i*Q1
  iso.back_table.assign(N, CurvePoint::infinity());
  CurvePoint rowP = CurvePoint::infinity();
  for (std::uint64_t i = 0; i < n; ++i) {
    CurvePoint pt = rowP;
    for (std::uint64_t j = 0; j < m; ++j) {
      const std::uint64_t idx = j + m * i;
      iso.back_table[idx] = pt;
      const bool inserted = iso.fwd_table.emplace(detail::point_key(pt), idx).second;
      SUMSETLAB_CHECK(inserted, "generator pair does not span the group");
      pt = ec_add(c, pt, Q2);
    }
    rowP = ec_add(c, rowP, Q1);
  }
  SUMSETLAB_CHECK(iso.fwd_table.size() == N, "dlog table does not cover E(F_p)");

  // homomorphism audit: exhaustive for small groups, sampled above
  auto check_pair = [&](std::uint64_t i, std::uint64_t j) {
    const CurvePoint s = ec_add(c, iso.back_table[i], iso.back_table[j]);
    SUMSETLAB_CHECK(iso.fwd(s) == iso.abstract_group.add(i, j),
                    "dlog tables are not a homomorphism");
  };
  if (N <= 200) {
    for (std::uint64_t i = 0; i < N; ++i)
      for (std::uint64_t j = i; j < N; ++j) check_pair(i, j);
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<std::uint64_t> dist(0, N - 1);
    for (int s = 0; s < 10000; ++s) check_pair(dist(rng), dist(rng));
  }
  return iso;
}

}  // namespace sumsetlab
