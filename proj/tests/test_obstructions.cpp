#include <catch_amalgamated.hpp>

#include "sumsetlab/element_set.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/obstructions.hpp"
#include "sumsetlab/oracles.hpp"
#include "sumsetlab/subgroup.hpp"

using namespace sumsetlab;

TEST_CASE("normalization translates the densest fiber to residue 0") {
  const GroupSpec G = GroupSpec::parse("Z30");
  const auto qs = prime_index_subgroups(G, 5);
  REQUIRE(!qs.empty());
  const auto& pi = qs[0].map;
  // pile elements onto one non-zero residue class
  ElementSet A(30);
  for (std::uint64_t e = 0; e < 30; ++e)
    if (pi.residue[e] == 2) A.set(e);
  A.set(0);  // one stray
  const auto dec = normalize_translate(G, pi, A);
  CHECK(dec.translated.count() == A.count());
  // fiber 0 now holds the maximum
  for (std::uint64_t r = 1; r < pi.d; ++r) CHECK(dec.fiber_sizes[0] >= dec.fiber_sizes[r]);
  // the shift really is a translation of A
  CHECK(translate(G, A, G.neg(dec.shift)) == dec.translated);
}

TEST_CASE("density flag uses the exact rational cutoff") {
  const GroupSpec G = GroupSpec::parse("Z13");
  ElementSet A(13);
  for (std::uint64_t e = 0; e < 5; ++e) A.set(e);
  // 13*5 = 65 <= 5*13 = 65: boundary counts as low
  CHECK(obstruction_scan(G, A, 0).density_low);
  A.set(5);
  CHECK_FALSE(obstruction_scan(G, A, 0).density_low);
}

TEST_CASE("index-2 coset containment is flagged with excess") {
  const GroupSpec G = GroupSpec::parse("Z10");
  const ElementSet evens = ElementSet::of(10, {0, 2, 4, 6, 8});
  const auto rep = obstruction_scan(G, evens, 0);
  REQUIRE(rep.index2.size() == 1);
  CHECK(rep.index2[0].excess == 0);
  CHECK_FALSE(rep.gamma3_full);

  // t = 1 tolerates one escapee
  ElementSet nearly = evens;
  nearly.set(1);
  CHECK(obstruction_scan(G, nearly, 0).index2.empty());
  const auto rep1 = obstruction_scan(G, nearly, 1);
  REQUIRE(rep1.index2.size() == 1);
  CHECK(rep1.index2[0].excess == 1);
}

TEST_CASE("two-coset index-5 containment") {
  const GroupSpec G = GroupSpec::parse("Z15");
  const auto qs = prime_index_subgroups(G, 5);
  REQUIRE(!qs.empty());
  const auto& pi = qs[0].map;
  ElementSet A(15);
  for (std::uint64_t e = 0; e < 15; ++e)
    if (pi.residue[e] == 1 || pi.residue[e] == 3) A.set(e);
  const auto rep = obstruction_scan(G, A, 0);
  REQUIRE(!rep.index5.empty());
  CHECK(rep.index5[0].excess == 0);
}

TEST_CASE("gamma3 fullness in the report matches direct computation") {
  const GroupSpec G = GroupSpec::parse("Z11");
  const ElementSet A = ElementSet::of(11, {0, 1, 2, 3, 4, 5, 6});
  const auto rep = obstruction_scan(G, A, 0);
  const auto t = restricted_sumset_table(G, A, 3);
  CHECK(rep.gamma3_full == t.layer(3).is_full());
  CHECK(rep.gamma3_full);
}

TEST_CASE("distinct index-2 cosets meet in at most a quarter of the group") {
  for (const char* name : {"Z8", "Z12", "Z2xZ6", "Z2xZ2xZ4", "Z16"}) {
    const GroupSpec G = GroupSpec::parse(name);
    CHECK(coset_intersection_audit(G) <= G.order / 4);
  }
}

TEST_CASE("window cover over the 3-element modulus") {
  // values {1,2} with enough mass cover every residue in a 3-length window
  const Multiset U = Multiset::from_values(3, {1, 1, 2, 2});
  const auto rep = consecutive_cover(3, U, 1);
  CHECK(rep.covered);
  for (std::uint64_t s = 0; s < 3; ++s) {
    REQUIRE(rep.per_residue[s].has_value());
    const auto& w = *rep.per_residue[s];
    CHECK(w.length >= 1);
    CHECK(w.length <= 3);
    std::uint64_t total = 0, val = 0;
    for (std::uint64_t v = 0; v < 3; ++v) {
      CHECK(w.counts[v] <= U.mult[v]);
      total += w.counts[v];
      val = (val + v * w.counts[v]) % 3;
    }
    CHECK(total == w.length);
    CHECK(val == s);
  }
}

TEST_CASE("window cover rejects bad inputs") {
  const Multiset U = Multiset::from_values(3, {1, 2});
  CHECK_THROWS_AS(consecutive_cover(7, U, 1), ConfigError);   // modulus not 3/5
  CHECK_THROWS_AS(consecutive_cover(3, U, 3), ConfigError);   // window exceeds u
  const Multiset Z = Multiset::from_values(3, {0, 1, 2});
  CHECK_THROWS_AS(consecutive_cover(3, Z, 1), ConfigError);   // support touches 0
  const Multiset S = Multiset::from_values(5, {1, 2, 3});
  CHECK_THROWS_AS(consecutive_cover(5, S, 1), ConfigError);   // u < 4
}

TEST_CASE("saturation predicate confirms fullness when hypotheses hold") {
  // p=7, h=4, values 1..6 with multiplicity 2 each: u=12, 2u=24 > (p-2)h=20
  std::vector<std::uint64_t> vals;
  for (std::uint64_t v = 1; v <= 6; ++v) {
    vals.push_back(v);
    vals.push_back(v);
  }
  const Multiset U = Multiset::from_values(7, vals);
  for (std::uint64_t ell = 3; ell + 7 <= 13; ++ell) {
    const auto res = sigma_full_predicate(7, 4, U, ell);
    CHECK(res.hypotheses_met);
    CHECK(res.full);
  }
  // out-of-range ell: hypotheses not met, no claim
  CHECK_FALSE(sigma_full_predicate(7, 4, U, 2).hypotheses_met);
  CHECK_FALSE(sigma_full_predicate(7, 4, U, 7).hypotheses_met);
}

TEST_CASE("saturation predicate validates its inputs") {
  const Multiset U = Multiset::from_values(7, {1, 2, 3, 4});
  CHECK_THROWS_AS(sigma_full_predicate(6, 4, U, 3), ConfigError);   // composite p
  CHECK_THROWS_AS(sigma_full_predicate(7, 3, U, 3), ConfigError);   // h < 4
  const Multiset H = Multiset::from_mult(7, {0, 5, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(sigma_full_predicate(7, 4, H, 3), ConfigError);   // multiplicity > h
}
