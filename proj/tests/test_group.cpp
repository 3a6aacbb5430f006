#include <catch_amalgamated.hpp>

#include "sumsetlab/group.hpp"
#include "sumsetlab/oracles.hpp"

using namespace sumsetlab;

TEST_CASE("parse accepts the ZnxZm grammar") {
  const GroupSpec g1 = GroupSpec::parse("Z7");
  CHECK(g1.order == 7);
  CHECK(g1.name() == "Z7");

  const GroupSpec g2 = GroupSpec::parse("Z2xZ12");
  CHECK(g2.order == 24);
  CHECK(g2.rank() == 2);
  CHECK(g2.name() == "Z2xZ12");

  CHECK_THROWS_AS(GroupSpec::parse(""), ConfigError);
  CHECK_THROWS_AS(GroupSpec::parse("Z0"), ConfigError);
  CHECK_THROWS_AS(GroupSpec::parse("Z1"), ConfigError);
  CHECK_THROWS_AS(GroupSpec::parse("7"), ConfigError);
  CHECK_THROWS_AS(GroupSpec::parse("Z4x"), ConfigError);
  CHECK_THROWS_AS(GroupSpec::parse("Z4xZ-2"), ConfigError);
}

TEST_CASE("order cap rejects oversized groups") {
  CHECK_THROWS_AS(GroupSpec::parse("Z1048577"), ConfigError);
  CHECK(GroupSpec::parse("Z1048576").order == 1u << 20);
}

TEST_CASE("index arithmetic uses weight-1 first coordinate") {
  const GroupSpec G = GroupSpec::from_factors({2, 12});
  // index = c0 + 2*c1
  CHECK(G.index({1, 0}) == 1);
  CHECK(G.index({0, 1}) == 2);
  CHECK(G.index({1, 5}) == 11);
  const auto c = G.coords(11);
  CHECK(c == std::vector<std::uint64_t>{1, 5});
}

TEST_CASE("group law round-trips against coordinates") {
  const GroupSpec G = GroupSpec::from_factors({3, 4});
  for (std::uint64_t x = 0; x < G.order; ++x) {
    CHECK(G.add(x, G.neg(x)) == 0);
    CHECK(G.add(x, 0) == x);
    for (std::uint64_t y = 0; y < G.order; ++y) {
      CHECK(G.add(x, y) == G.add(y, x));
      CHECK(G.sub(G.add(x, y), y) == x);
    }
  }
  // scalar ladder vs repeated addition, negative scalars included
  for (std::uint64_t x = 0; x < G.order; ++x) {
    std::uint64_t acc = 0;
    for (std::int64_t c = 0; c <= 15; ++c) {
      CHECK(G.smul(c, x) == acc);
      CHECK(G.smul(-c, x) == G.neg(acc));
      acc = G.add(acc, x);
    }
  }
}

TEST_CASE("torsion2 counts the 2-torsion subgroup") {
  CHECK(GroupSpec::parse("Z7").torsion2() == 1);
  CHECK(GroupSpec::parse("Z46320").torsion2() == 2);
  CHECK(GroupSpec::parse("Z2xZ12").torsion2() == 4);
  CHECK(GroupSpec::from_factors({2, 2, 2}).torsion2() == 8);
}

TEST_CASE("canonical factors form a divisibility chain") {
  CHECK(GroupSpec::from_factors({2, 5}).canonical_factors() == std::vector<std::uint64_t>{10});
  CHECK(GroupSpec::from_factors({3, 4}).canonical_factors() == std::vector<std::uint64_t>{12});
  CHECK(GroupSpec::from_factors({2, 12}).canonical_factors() ==
        std::vector<std::uint64_t>{2, 12});
  CHECK(GroupSpec::from_factors({2, 2, 3}).canonical_factors() ==
        std::vector<std::uint64_t>{2, 6});
  CHECK(GroupSpec::from_factors({6, 10, 15}).canonical_factors() ==
        std::vector<std::uint64_t>{30, 30});

  // agreement with the gcd/lcm oracle on mixed factor lists
  for (const auto& fs : std::vector<std::vector<std::uint64_t>>{
           {4, 6}, {8, 12, 18}, {2, 3, 5, 7}, {9, 21}, {16, 24}}) {
    CHECK(GroupSpec::from_factors(fs).canonical_factors() ==
          oracle::smith_invariant_factors(fs));
  }
}

TEST_CASE("isomorphism type counts match the partition formula") {
  // number of types = product over primes of p(exponent)
  CHECK(abelian_group_types(2).size() == 1);
  CHECK(abelian_group_types(4).size() == 2);
  CHECK(abelian_group_types(8).size() == 3);
  CHECK(abelian_group_types(12).size() == 2);
  CHECK(abelian_group_types(16).size() == 5);
  CHECK(abelian_group_types(24).size() == 3);
  CHECK(abelian_group_types(36).size() == 4);
  CHECK(abelian_group_types(60).size() == 2);
  CHECK(abelian_group_types(64).size() == 11);
}

TEST_CASE("types of equal order are pairwise non-isomorphic") {
  for (std::uint64_t n : {8u, 12u, 16u, 24u, 36u}) {
    const auto types = abelian_group_types(n);
    std::vector<std::vector<std::uint64_t>> canon;
    for (const auto& t : types) canon.push_back(GroupSpec::from_factors(t).canonical_factors());
    std::sort(canon.begin(), canon.end());
    CHECK(std::adjacent_find(canon.begin(), canon.end()) == canon.end());
  }
}
