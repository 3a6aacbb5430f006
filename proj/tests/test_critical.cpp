#include <catch_amalgamated.hpp>

#include "sumsetlab/critical.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/oracles.hpp"

using namespace sumsetlab;

TEST_CASE("exact critical numbers at small order match the 2^g oracle") {
  struct Case {
    const char* name;
    std::uint32_t k;
    std::uint64_t mu;
  };
  // Z8 at k=3 sits NOT at the even floor g/2+1 = 5: the run {0,1,2,3,4}
  // misses 2, so mu = 6.
  const Case cases[] = {
      {"Z8", 3, 6}, {"Z10", 3, 7}, {"Z12", 3, 7}, {"Z2xZ6", 3, 7},
      {"Z7", 3, 5}, {"Z9", 3, 7},  {"Z11", 3, 7}, {"Z13", 4, 7},
  };
  for (const auto& c : cases) {
    const GroupSpec G = GroupSpec::parse(c.name);
    const auto rec = mu_k_exact(G, c.k);
    REQUIRE(rec.certified);
    REQUIRE(rec.mu_exact.has_value());
    CHECK(*rec.mu_exact == c.mu);
    CHECK(oracle::brute_mu(G, c.k) == c.mu);
    CHECK(rec.mu_lower == c.mu);
    CHECK(rec.mu_upper == c.mu);
  }
}

TEST_CASE("certified witness really fails to cover") {
  const GroupSpec G = GroupSpec::parse("Z12");
  const auto rec = mu_k_exact(G, 3);
  REQUIRE(rec.certified);
  REQUIRE(rec.witness.has_value());
  REQUIRE(rec.missed.has_value());
  CHECK(rec.witness->count() + 1 == *rec.mu_exact);
  const auto t = restricted_sumset_table(G, *rec.witness, 3);
  CHECK_FALSE(t.layer(3).test(*rec.missed));
}

TEST_CASE("even-order index-2 bound supplies a witness") {
  const GroupSpec G = GroupSpec::parse("Z14");
  const auto lb = even_lower_bound(G, 3);
  REQUIRE(lb.has_value());
  CHECK(lb->first == 8);  // g/2 + 1
  CHECK(lb->second.count() == 7);
  const auto t = restricted_sumset_table(G, lb->second, 3);
  CHECK_FALSE(t.layer(3).is_full());
  // odd order has no such bound
  CHECK_FALSE(even_lower_bound(GroupSpec::parse("Z15"), 3).has_value());
}

TEST_CASE("budget exhaustion yields honest bounds instead of a claim") {
  const GroupSpec G = GroupSpec::parse("Z4xZ12");
  const auto rec = mu_k_exact(G, 3, 25);
  CHECK_FALSE(rec.certified);
  CHECK_FALSE(rec.mu_exact.has_value());
  CHECK(rec.mu_lower >= 25);  // index-2 floor g/2+1
  CHECK(rec.mu_lower <= rec.mu_upper);
}

TEST_CASE("threshold formula branches") {
  // even branch at threshold scale: g = 46320, |G[2]| = 2, 624*2+1846 = 3094
  const auto even = predict_critical_number(GroupSpec::parse("Z46320"), 10);
  CHECK(even.g_even);
  CHECK(even.k_in_range);
  CHECK(even.branch == "even_exact");
  REQUIRE(even.predicted.has_value());
  CHECK(*even.predicted == 46320 / 2 + 1);
  CHECK(even.exact);
  CHECK(even.asserted);

  // odd threshold instance: g = 1235 sits exactly at the base odd cutoff
  const auto odd = predict_critical_number(GroupSpec::parse("Z1235"), 4);
  CHECK_FALSE(odd.g_even);
  CHECK(odd.branch == "odd_k4");
  REQUIRE(odd.formula_value.has_value());
  CHECK(*odd.formula_value == floor_cg(1235) + 2);
  CHECK(odd.asserted);

  // k = 3 in odd order has no bound family; the record says so
  const auto odd3 = predict_critical_number(GroupSpec::parse("Z1235"), 3);
  CHECK_FALSE(odd3.asserted);
  CHECK_FALSE(odd3.formula_value.has_value());
  CHECK_FALSE(odd3.reason.empty());

  // below every threshold: no prediction is asserted
  const auto small = predict_critical_number(GroupSpec::parse("Z30"), 3);
  CHECK_FALSE(small.asserted);
  CHECK_FALSE(small.predicted.has_value());

  // k out of range disables assertions entirely
  const auto bad_k = predict_critical_number(GroupSpec::parse("Z46320"), 2);
  CHECK_FALSE(bad_k.k_in_range);
  CHECK_FALSE(bad_k.asserted);
}

TEST_CASE("floor function c(g)") {
  CHECK(floor_cg(1235) == 2 * 1235 / 5);  // 5 | 1235
  CHECK(floor_cg(13) == 5);
  CHECK(floor_cg(26) == 10);
}

TEST_CASE("dichotomy table carries canonical names and certified flags") {
  const auto recs = dichotomy_table(8, 10, 3, 3);
  REQUIRE(recs.size() == 6);  // 3 types of order 8, 2 of order 9, 1 of order 10
  bool saw_z10 = false;
  for (const auto& r : recs) {
    CHECK(r.k == 3);
    CHECK(r.certified);
    if (r.group.name() == "Z10") saw_z10 = true;
    CHECK(r.group.name().find("xZ5") == std::string::npos);
  }
  CHECK(saw_z10);
}

TEST_CASE("interval-only records above the exact cap") {
  const auto recs = dichotomy_table(30, 30, 3, 3, 4'000'000, 20);
  REQUIRE(!recs.empty());
  for (const auto& r : recs) {
    CHECK_FALSE(r.certified);
    CHECK(r.mu_lower <= r.mu_upper);
    CHECK(r.mu_lower >= 4);
  }
}
