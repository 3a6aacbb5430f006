#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sumsetlab/common.hpp"

namespace sumsetlab {

/// A finite abelian group as an explicit product of cyclic factors
/// Z_{n_1} x ... x Z_{n_r}.  Elements are addressed by mixed-radix index:
/// index(x) = sum_j x_j * w_j with w_1 = 1 and w_{j+1} = w_j * n_j.
struct GroupSpec {
  std::vector<std::uint64_t> factors;
  std::vector<std::uint64_t> weights;
  std::uint64_t order = 1;

  GroupSpec() = default;

  static GroupSpec from_factors(std::vector<std::uint64_t> fs) {
    if (fs.empty()) throw ConfigError("group needs at least one cyclic factor");
    GroupSpec g;
    g.factors = std::move(fs);
    g.weights.resize(g.factors.size());
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < g.factors.size(); ++j) {
      if (g.factors[j] < 2)
        throw ConfigError("cyclic factor must be >= 2");
      g.weights[j] = w;
      if (w > kOrderCap / g.factors[j])
        throw ConfigError("group order exceeds cap 2^20");
      w *= g.factors[j];
    }
    g.order = w;
    return g;
  }

  /// Grammar: Z<n>(xZ<n>)*, e.g. "Z8" or "Z4xZ2".
  static GroupSpec parse(std::string_view text) {
    std::vector<std::uint64_t> fs;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] != 'Z')
        throw ConfigError("group grammar: expected 'Z' in '" + std::string(text) + "'");
      ++i;
      std::uint64_t n = 0;
      std::size_t digits = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        n = n * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (n > kOrderCap) throw ConfigError("cyclic factor exceeds cap");
        ++i;
        ++digits;
      }
      if (digits == 0) throw ConfigError("group grammar: missing factor size");
      fs.push_back(n);
      if (i < text.size()) {
        if (text[i] != 'x')
          throw ConfigError("group grammar: expected 'x' separator");
        ++i;
        if (i == text.size()) throw ConfigError("group grammar: trailing 'x'");
      }
    }
    if (fs.empty()) throw ConfigError("group grammar: empty spec");
    return from_factors(std::move(fs));
  }

  std::size_t rank() const { return factors.size(); }

  std::string name() const {
    std::string s;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j) s += 'x';
      s += 'Z';
      s += std::to_string(factors[j]);
    }
    return s;
  }

  bool operator==(const GroupSpec& o) const { return factors == o.factors; }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

  std::vector<std::uint64_t> coords(std::uint64_t idx) const {
    std::vector<std::uint64_t> c(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) {
      c[j] = idx % factors[j];
      idx /= factors[j];
    }
    return c;
  }

  std::uint64_t index(const std::vector<std::uint64_t>& c) const {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) idx += (c[j] % factors[j]) * weights[j];
    return idx;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (factors.size() == 1) {
      std::uint64_t s = a + b;
      return s >= order ? s - order : s;
    }
    std::uint64_t res = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const std::uint64_t n = factors[j];
      std::uint64_t d = a % n + b % n;
      if (d >= n) d -= n;
      res += d * weights[j];
      a /= n;
      b /= n;
    }
    return res;
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (factors.size() == 1) return a == 0 ? 0 : order - a;
    std::uint64_t res = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const std::uint64_t n = factors[j];
      const std::uint64_t d = a % n;
      res += (d == 0 ? 0 : n - d) * weights[j];
      a /= n;
    }
    return res;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t smul(std::int64_t c, std::uint64_t a) const {
    std::uint64_t res = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const std::uint64_t n = factors[j];
      const std::uint64_t cj = static_cast<std::uint64_t>(((c % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n))) % n;
      res += (cj * (a % n)) % n * weights[j];
      a /= n;
    }
    return res;
  }

  /// |G[2]|: the number of solutions of 2x = 0, i.e. 2^{#even factors}.
  std::uint64_t torsion2() const {
    std::uint64_t t = 1;
    for (std::uint64_t n : factors)
      if (n % 2 == 0) t *= 2;
    return t;
  }

  std::uint64_t smallest_prime() const { return smallest_prime_factor(order); }

  /// Invariant factors m_1 | m_2 | ... | m_t in ascending order.
  std::vector<std::uint64_t> canonical_factors() const {
    std::map<std::uint64_t, std::vector<std::uint64_t>> exps;  // prime -> exponents
    for (std::uint64_t n : factors) {
      std::uint64_t m = n;
      for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        std::uint64_t e = 0;
        while (m % d == 0) {
          m /= d;
          ++e;
        }
        exps[d].push_back(e);
      }
      if (m > 1) exps[m].push_back(1);
    }
    std::size_t slots = 0;
    for (auto& [p, es] : exps) {
      std::sort(es.begin(), es.end(), std::greater<>());
      slots = std::max(slots, es.size());
    }
    std::vector<std::uint64_t> inv(slots, 1);
    for (auto& [p, es] : exps) {
      for (std::size_t s = 0; s < es.size(); ++s) {
        std::uint64_t pw = 1;
        for (std::uint64_t e = 0; e < es[s]; ++e) pw *= p;
        inv[s] *= pw;  // slot 0 holds the largest invariant factor
      }
    }
    std::reverse(inv.begin(), inv.end());
    return inv;
  }
};

struct GroupStats {
  std::uint64_t order;
  std::uint64_t torsion2;
  std::uint64_t smallest_prime;
};

inline GroupStats group_stats(const GroupSpec& g) {
  return GroupStats{g.order, g.torsion2(), g.smallest_prime()};
}

/// All isomorphism types of abelian groups of order n, each given as a list
/// of prime-power cyclic factors (one partition choice per prime).
inline std::vector<std::vector<std::uint64_t>> abelian_group_types(std::uint64_t n) {
  if (n < 2) throw ConfigError("abelian_group_types: order must be >= 2");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pf;  // (prime, exponent)
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    std::uint64_t e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    pf.emplace_back(d, e);
  }
  if (m > 1) pf.emplace_back(m, 1);

  // partitions of e, each part list descending
  auto partitions = [](std::uint64_t e) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t rem, std::uint64_t maxpart) -> void {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (std::uint64_t part = std::min(rem, maxpart); part >= 1; --part) {
        cur.push_back(part);
        self(self, rem - part, part);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    return out;
  };

  std::vector<std::vector<std::uint64_t>> types{{}};
  for (auto [p, e] : pf) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& lambda : partitions(e)) {
      std::vector<std::uint64_t> powers;
      for (std::uint64_t part : lambda) {
        std::uint64_t pw = 1;
        for (std::uint64_t i = 0; i < part; ++i) pw *= p;
        powers.push_back(pw);
      }
      for (const auto& base : types) {
        auto combined = base;
        combined.insert(combined.end(), powers.begin(), powers.end());
        next.push_back(std::move(combined));
      }
    }
    types = std::move(next);
  }
  for (auto& t : types) std::sort(t.begin(), t.end());
  std::sort(types.begin(), types.end());
  return types;
}

}  // namespace sumsetlab
