#include <catch_amalgamated.hpp>

#include <algorithm>

#include "sumsetlab/group.hpp"
#include "sumsetlab/oracles.hpp"
#include "sumsetlab/subgroup.hpp"

using namespace sumsetlab;

TEST_CASE("index-2 subgroups of small groups") {
  // Z8 has exactly one subgroup of index 2: the evens
  const GroupSpec z8 = GroupSpec::parse("Z8");
  const auto qs = prime_index_subgroups(z8, 2);
  REQUIRE(qs.size() == 1);
  CHECK(qs[0].subgroup.members.to_indices() == std::vector<std::uint64_t>{0, 2, 4, 6});

  // Z2 x Z2 has three subgroups of index 2
  const GroupSpec v4 = GroupSpec::from_factors({2, 2});
  CHECK(prime_index_subgroups(v4, 2).size() == 3);

  // non-divisor index is an input error
  CHECK_THROWS_AS(prime_index_subgroups(GroupSpec::parse("Z15"), 2), ConfigError);
}

TEST_CASE("prime-index subgroups agree with the closed-subset oracle") {
  for (const char* name : {"Z12", "Z2xZ6", "Z2xZ2xZ2", "Z3xZ3", "Z16", "Z15"}) {
    const GroupSpec G = GroupSpec::parse(name);
    for (std::uint64_t d : {2, 3, 5}) {
      if (G.order % d != 0) continue;
      const auto got = prime_index_subgroups(G, d);
      const auto want = oracle::brute_subgroups_of_order(G, G.order / d);
      std::vector<std::vector<std::uint64_t>> got_sets, want_sets;
      for (const auto& q : got) got_sets.push_back(q.subgroup.members.to_indices());
      for (const auto& s : want) want_sets.push_back(s.to_indices());
      std::sort(got_sets.begin(), got_sets.end());
      std::sort(want_sets.begin(), want_sets.end());
      CHECK(got_sets == want_sets);
    }
  }
}

TEST_CASE("quotient map is a homomorphism with the right kernel") {
  const GroupSpec G = GroupSpec::parse("Z2xZ12");
  for (const auto& q : prime_index_subgroups(G, 3)) {
    const auto& pi = q.map;
    CHECK(pi.d == 3);
    for (std::uint64_t x = 0; x < G.order; ++x)
      for (std::uint64_t y = 0; y < G.order; ++y)
        CHECK(pi.residue[G.add(x, y)] == (pi.residue[x] + pi.residue[y]) % pi.d);
    // kernel = residue-0 fiber = the subgroup itself
    CHECK(pi.kernel_set() == q.subgroup.members);
    // cosets partition the group into d classes of equal size
    const auto cs = pi.cosets();
    REQUIRE(cs.size() == 3);
    std::uint64_t total = 0;
    for (const auto& c : cs) {
      CHECK(c.count() == G.order / 3);
      total += c.count();
    }
    CHECK(total == G.order);
  }
}

TEST_CASE("subgroup closure sanity") {
  const GroupSpec G = GroupSpec::parse("Z30");
  for (std::uint64_t d : {2, 3, 5}) {
    for (const auto& q : prime_index_subgroups(G, d)) {
      const auto elems = q.subgroup.members.to_indices();
      for (auto x : elems)
        for (auto y : elems) CHECK(q.subgroup.members.test(G.add(x, y)));
    }
  }
}

TEST_CASE("non-prime index is rejected") {
  const GroupSpec G = GroupSpec::parse("Z12");
  CHECK_THROWS_AS(prime_index_subgroups(G, 4), ConfigError);
  CHECK_THROWS_AS(prime_index_subgroups(G, 1), ConfigError);
}
