#include <catch_amalgamated.hpp>

#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/oracles.hpp"

using namespace sumsetlab;

TEST_CASE("curve validation") {
  CHECK_NOTHROW(build_curve(13, 1, 1));
  // 4*1 + 27*9 = 247 = 0 mod 13: singular
  CHECK_THROWS_AS(build_curve(13, 1, 3), ConfigError);
  CHECK_THROWS_AS(build_curve(5, 0, 0), ConfigError);
  CHECK_THROWS_AS(build_curve(4, 1, 1), ConfigError);   // composite
  CHECK_THROWS_AS(build_curve(3, 1, 1), ConfigError);   // p < 5
}

TEST_CASE("curve spec grammar") {
  const Curve c = parse_curve("p=13,a=1,b=1");
  CHECK(c.p == 13);
  CHECK(c.a == 1);
  CHECK(c.b == 1);
  // keys in any order, values reduced mod p
  const Curve d = parse_curve("b=14,p=13,a=-12");
  CHECK(d.a == 1);
  CHECK(d.b == 1);
  CHECK_THROWS_AS(parse_curve("p=13,a=1"), ConfigError);        // missing key
  CHECK_THROWS_AS(parse_curve("p=13,a=1,b=1,c=2"), ConfigError);
  CHECK_THROWS_AS(parse_curve("13,1,1"), ConfigError);
}

TEST_CASE("point parsing and printing") {
  const Curve c = build_curve(13, 1, 1);
  CHECK(parse_point(c, "inf").inf);
  CHECK(parse_point(c, "O").inf);
  const CurvePoint p = parse_point(c, "(0,1)");
  CHECK(p.x == 0);
  CHECK(p.y == 1);
  CHECK(p.to_string() == "(0,1)");
  CHECK(parse_point(c, "( 12 , 5 )").x == 12);
  CHECK_THROWS_AS(parse_point(c, "(0,2)"), ConfigError);  // not on the curve
  CHECK_THROWS_AS(parse_point(c, "0,1"), ConfigError);
}

TEST_CASE("group law axioms on a small curve") {
  const Curve c = build_curve(13, 1, 1);
  const auto en = enumerate_points(c);
  REQUIRE(en.count == 18);
  const CurvePoint O = CurvePoint::infinity();
  for (const auto& P : en.points) {
    CHECK(ec_add(c, P, O) == P);
    CHECK(ec_add(c, O, P) == P);
    CHECK(ec_add(c, P, ec_neg(c, P)).inf);
    for (const auto& Q : en.points) {
      const CurvePoint S = ec_add(c, P, Q);
      CHECK(on_curve(c, S));
      CHECK(S == ec_add(c, Q, P));
    }
  }
  // full associativity on 18 points is 5832 triples: affordable
  for (const auto& P : en.points)
    for (const auto& Q : en.points)
      for (const auto& R : en.points)
        CHECK(ec_add(c, ec_add(c, P, Q), R) == ec_add(c, P, ec_add(c, Q, R)));
}

TEST_CASE("point counts match the grid oracle") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        if ((4 * a % p * a % p * a % p + 27 * b % p * b % p) % p == 0) continue;
        const Curve c = build_curve(p, a, b);
        CHECK(enumerate_points(c).count == oracle::brute_curve_count(c));
      }
  }
}

TEST_CASE("every count lies in the Hasse window") {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        if ((4 * a * a % p * a % p + 27 * b * b % p) % p == 0) continue;
        const auto en = enumerate_points(build_curve(p, a, b));
        const std::int64_t d =
            static_cast<std::int64_t>(en.count) - static_cast<std::int64_t>(p) - 1;
        CHECK(d * d <= static_cast<std::int64_t>(4 * p));
      }
  }
}

TEST_CASE("scalar ladder matches repeated addition") {
  const Curve c = build_curve(17, 2, 3);
  const auto en = enumerate_points(c);
  const CurvePoint P = en.points[1];
  CurvePoint acc = CurvePoint::infinity();
  for (std::int64_t m = 0; m <= 40; ++m) {
    CHECK(ec_smul(c, m, P) == acc);
    CHECK(ec_smul(c, -m, P) == ec_neg(c, acc));
    acc = ec_add(c, acc, P);
  }
}

TEST_CASE("structure map is an isomorphism") {
  for (auto [p, a, b] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>{
           {13, 1, 1}, {17, 2, 3}, {19, 1, 6}, {23, 1, 5}, {29, 0, 1}}) {
    const GroupIso iso = group_structure_iso(build_curve(p, a, b));
    const std::uint64_t N = iso.abstract_group.order;
    CHECK(iso.m * iso.n == N);
    CHECK(N == enumerate_points(iso.curve).count);
    if (iso.m > 1) CHECK(iso.n % iso.m == 0);
    // fwd/back are mutually inverse and respect addition
    for (std::uint64_t i = 0; i < N; ++i) {
      CHECK(iso.fwd(iso.back(i)) == i);
      for (std::uint64_t j = 0; j < N; ++j) {
        const std::uint64_t s = iso.fwd(ec_add(iso.curve, iso.back(i), iso.back(j)));
        CHECK(s == iso.abstract_group.add(i, j));
      }
    }
  }
}

TEST_CASE("a non-cyclic structure appears where it must") {
  // E/F_5: y^2 = x^3 + 2x has 2-torsion rank 2 when x^3+2x splits
  bool found_non_cyclic = false;
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::uint64_t a = 0; a < p && !found_non_cyclic; ++a)
      for (std::uint64_t b = 0; b < p && !found_non_cyclic; ++b) {
        if ((4 * a * a % p * a % p + 27 * b * b % p) % p == 0) continue;
        const GroupIso iso = group_structure_iso(build_curve(p, a, b));
        if (iso.m > 1) found_non_cyclic = true;
      }
  }
  CHECK(found_non_cyclic);
}

TEST_CASE("hasse floor and the threshold inequality") {
  CHECK(hasse_min_count(47089) == 46656);
  CHECK(isqrt_u64(47089) == 217);
  // (sqrt(q) - 1)^2 >= 46656 exactly from q = 217^2 = 47089 upward
  auto holds = [](std::uint64_t q) {
    const std::int64_t lhs = static_cast<std::int64_t>(q) - 46655;
    return lhs >= 0 && lhs * lhs >= static_cast<std::int64_t>(4 * q);
  };
  CHECK(holds(47089));
  CHECK_FALSE(holds(47088));
}

TEST_CASE("enumeration cap guards big primes") {
  CHECK_THROWS_AS(enumerate_points(build_curve(10007, 1, 1)), ConfigError);
  CHECK_NOTHROW(enumerate_points(build_curve(9973, 1, 1)));
}
