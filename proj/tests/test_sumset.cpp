#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "sumsetlab/element_set.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/oracles.hpp"
#include "sumsetlab/sumset.hpp"

using namespace sumsetlab;

TEST_CASE("layers of a worked 3-element example") {
  const GroupSpec G = GroupSpec::parse("Z7");
  const ElementSet A = ElementSet::of(7, {1, 2, 3});
  const auto t = restricted_sumset_table(G, A, 3);
  CHECK(t.layer(0).to_indices() == std::vector<std::uint64_t>{0});
  CHECK(t.layer(1).to_indices() == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(t.layer(2).to_indices() == std::vector<std::uint64_t>{3, 4, 5});
  CHECK(t.layer(3).to_indices() == std::vector<std::uint64_t>{6});
}

TEST_CASE("k beyond the set size is rejected") {
  const GroupSpec G = GroupSpec::parse("Z7");
  const ElementSet A = ElementSet::of(7, {1, 2, 3});
  CHECK_THROWS_AS(restricted_sumset_table(G, A, 4), ConfigError);
}

TEST_CASE("DP layers match brute enumeration on assorted groups") {
  for (const char* name : {"Z11", "Z2xZ6", "Z3xZ4", "Z2xZ2xZ4"}) {
    const GroupSpec G = GroupSpec::parse(name);
    // a fixed aperiodic set: quadratic residues-ish picks
    std::vector<std::uint64_t> elems;
    for (std::uint64_t e = 0; e < G.order; e += 1)
      if ((e * e + e) % 3 != 1 && elems.size() < 7) elems.push_back((e * 5 + 2) % G.order);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const ElementSet A = ElementSet::from_indices(G.order, elems);
    const auto t = restricted_sumset_table(G, A, elems.size());
    const auto want = oracle::brute_gamma_all(G, elems);
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(t.layer(k) == want[k]);
  }
}

TEST_CASE("complement transform equals the high layer") {
  const GroupSpec G = GroupSpec::parse("Z13");
  const ElementSet A = ElementSet::of(13, {0, 1, 3, 6, 7, 11});
  const std::uint32_t a = 6;
  const auto t = restricted_sumset_table(G, A, a);
  // abar - Gamma_{a-k}(A) reconstructs Gamma_k(A) exactly
  for (std::uint32_t k = 0; k <= a; ++k) CHECK(complement_transform(t, k) == t.layer(k));
}

TEST_CASE("dp_witness returns a valid decomposition") {
  const GroupSpec G = GroupSpec::parse("Z13");
  const ElementSet A = ElementSet::of(13, {0, 2, 3, 5, 8, 11});
  const auto t = restricted_sumset_table(G, A, 4);
  for (std::uint64_t target = 0; target < 13; ++target) {
    const auto w = dp_witness(t, 4, target);
    if (!t.layer(4).test(target)) {
      CHECK_FALSE(w.has_value());
      continue;
    }
    REQUIRE(w.has_value());
    CHECK(w->size() == 4);
    std::uint64_t sum = 0;
    ElementSet seen(13);
    for (auto e : *w) {
      CHECK(A.test(e));
      CHECK_FALSE(seen.test(e));
      seen.set(e);
      sum = G.add(sum, e);
    }
    CHECK(sum == target);
  }
}

TEST_CASE("covers_all_lengths matches per-layer fullness") {
  const GroupSpec G = GroupSpec::parse("Z11");
  const ElementSet A = ElementSet::of(11, {0, 1, 2, 3, 4, 5, 6, 7});
  const auto t = restricted_sumset_table(G, A, 8);
  bool all = true;
  for (std::uint32_t k = 3; k <= 5; ++k) all = all && t.layer(k).is_full();
  CHECK(covers_all_lengths(G, A, 3, 5) == all);
}

TEST_CASE("lower bound formula for prime moduli") {
  // min{p, k|A| - k^2 + 1}
  CHECK(dsh_bound(13, 5, 2) == 7);
  CHECK(dsh_bound(13, 5, 3) == 7);
  CHECK(dsh_bound(7, 5, 2) == 7);
  CHECK(dsh_bound(31, 8, 4) == 17);
  CHECK_THROWS_AS(dsh_bound(12, 5, 2), ConfigError);  // composite modulus
}

TEST_CASE("lower bound formula holds on sampled prime sets") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23}[rng() % 6];
    const std::uint64_t a = 2 + rng() % std::min<std::uint64_t>(p - 1, 9);
    std::vector<std::uint64_t> pool(p);
    for (std::uint64_t i = 0; i < p; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(a);
    const ElementSet A = ElementSet::from_indices(p, pool);
    const GroupSpec G = GroupSpec::parse("Z" + std::to_string(p));
    const auto t = restricted_sumset_table(G, A, a);
    for (std::uint64_t k = 1; k <= a; ++k)
      CHECK(t.layer(k).count() >= dsh_bound(p, a, k));
  }
}

TEST_CASE("multiset sigma layers and the mass bound") {
  const Multiset U = Multiset::from_values(7, {1, 1, 2, 3, 3, 3});
  // Sigma_0 = {0}
  CHECK(multiset_sigma(U, 0).to_indices() == std::vector<std::uint64_t>{0});
  // Sigma_1 = support
  CHECK(multiset_sigma(U, 1).to_indices() == std::vector<std::uint64_t>{1, 2, 3});
  // ell beyond total mass is rejected
  CHECK_THROWS_AS(multiset_sigma(U, 7), ConfigError);
  // brute expansion agreement for all ell
  for (std::uint64_t ell = 0; ell <= 6; ++ell)
    CHECK(multiset_sigma(U, ell) == oracle::brute_sigma(U, ell));
  // the cardinality bound 1 - ell + sum min(ell, v)
  for (std::uint64_t ell = 1; ell <= 6; ++ell) {
    const auto got = multiset_sigma(U, ell);
    if (!got.is_full()) CHECK(static_cast<std::int64_t>(got.count()) >= dgm_bound(U, ell));
  }
}

TEST_CASE("sigma witness respects multiplicities") {
  const Multiset U = Multiset::from_values(7, {1, 1, 2, 5, 5, 6});
  for (std::uint64_t ell = 1; ell <= 6; ++ell) {
    const auto layer = multiset_sigma(U, ell);
    for (std::uint64_t s = 0; s < 7; ++s) {
      const auto w = sigma_witness(U, ell, s);
      CHECK(w.has_value() == layer.test(s));
      if (!w) continue;
      std::uint64_t total = 0, value = 0;
      for (std::uint64_t v = 0; v < 7; ++v) {
        CHECK((*w)[v] <= U.mult[v]);
        total += (*w)[v];
        value = (value + v * (*w)[v]) % 7;
      }
      CHECK(total == ell);
      CHECK(value == s);
    }
  }
}

TEST_CASE("truncated mass formula") {
  // q = floor(u / h) full runs plus remainder r: mass = q*ell + min(ell, r)
  CHECK(min_truncated_mass(7, 4, 3, 10) == 2 * 3 + 2);  // u=10, h=4 -> q=2, r=2
  CHECK(min_truncated_mass(7, 5, 5, 10) == 2 * 5 + 0);  // r=0
  CHECK(min_truncated_mass(11, 5, 4, 23) == 4 * 4 + 3);
  // needs ell <= h and u <= (p-1)h
  CHECK_THROWS_AS(min_truncated_mass(7, 4, 5, 8), ConfigError);
  CHECK_THROWS_AS(min_truncated_mass(7, 2, 2, 13), ConfigError);
}

TEST_CASE("memory cap env override is honored") {
  // The default cap admits Z_46320 tables; a 1 KB cap must not.
  setenv("SUMSETLAB_MEM_CAP", "1024", 1);
  const GroupSpec G = GroupSpec::parse("Z46320");
  ElementSet A(G.order);
  for (std::uint64_t e = 0; e < 40; ++e) A.set(e * 7);
  CHECK_THROWS_AS(restricted_sumset_table(G, A, 10), ConfigError);
  unsetenv("SUMSETLAB_MEM_CAP");
  CHECK_NOTHROW(restricted_sumset_table(G, A, 10));
}
