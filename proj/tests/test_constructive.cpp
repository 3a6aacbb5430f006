#include <catch_amalgamated.hpp>

#include <random>

#include "sumsetlab/constructive.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/obstructions.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"

using namespace sumsetlab;

namespace {

void check_witness(const GroupSpec& G, const ElementSet& A, std::uint64_t k,
                   std::uint64_t target, const std::vector<std::uint64_t>& w) {
  REQUIRE(w.size() == k);
  ElementSet seen(G.order);
  std::uint64_t sum = 0;
  for (auto e : w) {
    CHECK(A.test(e));
    CHECK_FALSE(seen.test(e));
    seen.set(e);
    sum = G.add(sum, e);
  }
  CHECK(sum == target);
}

}  // namespace

TEST_CASE("pair extraction finds a popular sum") {
  const GroupSpec G = GroupSpec::parse("Z35");
  ElementSet A(35);
  for (std::uint64_t e = 0; e < 18; ++e) A.set(2 * e % 35);
  const auto fam = best_pair_sum(G, A);
  const std::uint64_t a = A.count();
  // n_pair >= ceil((ceil(a^2/g) - 1) / 2)
  const std::uint64_t nb = (a * a + G.order - 1) / G.order;
  CHECK(fam.pairs.size() >= (nb - 1 + 1) / 2);
  for (const auto& [x, y] : fam.pairs) {
    CHECK(A.test(x));
    CHECK(A.test(y));
    CHECK(x != y);
    CHECK(G.add(x, y) == fam.beta);
  }
  // pairs are pairwise disjoint
  ElementSet used(G.order);
  for (const auto& [x, y] : fam.pairs) {
    CHECK_FALSE(used.test(x));
    CHECK_FALSE(used.test(y));
    used.set(x);
    used.set(y);
  }
}

TEST_CASE("pair padding represents dense odd-order instances") {
  const GroupSpec G = GroupSpec::parse("Z45");
  ElementSet A(45);
  for (std::uint64_t e = 0; e < 24; ++e) A.set(e);
  const auto table = restricted_sumset_table(G, A, 5);
  std::mt19937_64 rng(9);
  int issued = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t k = 3 + rng() % 3;
    const std::uint64_t target = rng() % 45;
    if (!table.layer(k).test(target)) continue;
    const auto r = pair_padding_represent(G, A, static_cast<std::uint32_t>(k), target);
    if (r.ok) {
      check_witness(G, A, k, target, r.witness);
      ++issued;
    } else {
      CHECK_FALSE(r.failed_hypothesis.empty());
    }
  }
  CHECK(issued > 0);
}

TEST_CASE("refusals carry the failed hypothesis name") {
  const GroupSpec G = GroupSpec::parse("Z35");
  // too sparse: density hypothesis must fail, no witness claim
  ElementSet sparse(35);
  for (std::uint64_t e : {0, 7, 9, 20}) sparse.set(e);
  const auto r = pair_padding_represent(G, sparse, 3, 1);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.failed_hypothesis.empty());
}

TEST_CASE("fiber lifting issues witnesses on kernel-dense sets") {
  const GroupSpec G = GroupSpec::parse("Z77");
  const auto qs = prime_index_subgroups(G, 7);
  REQUIRE(!qs.empty());
  const auto& pi = qs[0].map;
  // fill whole fibers so the kernel fiber is dense after normalization
  ElementSet A(77);
  for (std::uint64_t e = 0; e < 77; ++e)
    if (pi.residue[e] <= 3) A.set(e);
  const auto dec = normalize_translate(G, pi, A);
  const ElementSet& B = dec.translated;
  const std::uint32_t k = 5;
  const auto table = restricted_sumset_table(G, B, k);
  std::mt19937_64 rng(11);
  int issued = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t target = rng() % 77;
    if (!table.layer(k).test(target)) continue;
    const auto r = fiber_lift_represent(G, pi, B, k, target);
    if (r.ok) {
      check_witness(G, B, k, target, r.witness);
      ++issued;
    } else {
      CHECK_FALSE(r.failed_hypothesis.empty());
    }
  }
  CHECK(issued > 0);
}

TEST_CASE("fiber lifting refuses thin kernels by name") {
  const GroupSpec G = GroupSpec::parse("Z35");
  const auto qs = prime_index_subgroups(G, 7);
  REQUIRE(!qs.empty());
  const auto& pi = qs[0].map;
  ElementSet A(35);
  for (std::uint64_t e = 0; e < 19; ++e) A.set(e);
  const auto dec = normalize_translate(G, pi, A);
  const auto r = fiber_lift_represent(G, pi, dec.translated, 4, 0);
  if (!r.ok) CHECK_FALSE(r.failed_hypothesis.empty());
}

TEST_CASE("guards reject malformed represent inputs") {
  const GroupSpec G = GroupSpec::parse("Z35");
  ElementSet A(35);
  for (std::uint64_t e = 0; e < 20; ++e) A.set(e);
  CHECK_THROWS_AS(pair_padding_represent(G, A, 2, 0), ConfigError);
  CHECK_THROWS_AS(pair_padding_represent(G, A, 3, 99), ConfigError);
  ElementSet wrong(34);
  CHECK_THROWS_AS(pair_padding_represent(G, wrong, 3, 0), ConfigError);
}
