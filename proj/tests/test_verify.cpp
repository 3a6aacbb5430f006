#include <catch_amalgamated.hpp>

#include "sumsetlab/verify.hpp"

using namespace sumsetlab;

TEST_CASE("clean tables satisfy the complement identity") {
  const GroupSpec G = GroupSpec::parse("Z13");
  const ElementSet A = ElementSet::of(13, {0, 2, 3, 5, 8, 11});
  const auto table = restricted_sumset_table(G, A, 6);
  const auto res = check_complement_identity_table(G, A, table);
  CHECK(res.passed);
  CHECK(res.instances > 0);
}

TEST_CASE("a single flipped DP bit is caught with a counterexample") {
  const GroupSpec G = GroupSpec::parse("Z13");
  const ElementSet A = ElementSet::of(13, {0, 2, 3, 5, 8, 11});
  auto table = restricted_sumset_table(G, A, 6);
  table.layers[3].flip(7);  // corrupt one bit of one middle layer
  const auto res = check_complement_identity_table(G, A, table);
  CHECK_FALSE(res.passed);
  CHECK_FALSE(res.detail.empty());
  // the serialized counterexample pins down the failing layer
  const auto j = ordered_json::parse(res.detail);
  const std::uint64_t bad_k = j.at("k").get<std::uint64_t>();
  CHECK((bad_k == 3 || bad_k == 6 - 3));
}

TEST_CASE("flipping a bit in any layer is caught") {
  const GroupSpec G = GroupSpec::parse("Z11");
  const ElementSet A = ElementSet::of(11, {0, 1, 3, 7, 8});
  for (std::uint32_t k = 1; k <= 5; ++k) {
    for (std::uint64_t e = 0; e < 11; ++e) {
      auto table = restricted_sumset_table(G, A, 5);
      table.layers[k].flip(e);
      const auto res = check_complement_identity_table(G, A, table);
      CHECK_FALSE(res.passed);
    }
  }
}

TEST_CASE("granular fast checks pass at reduced scale") {
  CHECK(check_gamma_oracle(12, 20, 1).passed);
  CHECK(check_complement_identity(16, 30, 2).passed);
  CHECK(check_layer_shape(16, 30, 3).passed);
  CHECK(check_dsh_sampled({7, 11, 13}, 40, 4).passed);
  CHECK(check_dgm_sampled(200, 5).passed);
  CHECK(check_sigma_oracle(120, 6).passed);
  CHECK(check_even_rigidity(20).passed);
  CHECK(check_mu_small(12, 7).passed);
  CHECK(check_canonical_factors(100, 8).passed);
  CHECK(check_prime_index_subgroups(12).passed);
  CHECK(check_normalization(20, 9).passed);
  CHECK(check_obstruction_consistency(60, 10).passed);
  CHECK(check_coset_intersections(16).passed);
  CHECK(check_consecutive_cover(6, 6).passed);
  CHECK(check_sigma_full(60, 11).passed);
  CHECK(check_best_pair_sum(60, 12).passed);
  CHECK(check_represent_soundness(40, 13).passed);
  CHECK(check_serialization(14).passed);
}

TEST_CASE("fast suite aggregates and reports") {
  const auto rep = verify_suite(VerifyOptions{"fast", 0});
  CHECK(rep.tier == "fast");
  CHECK(rep.all_passed);
  CHECK(rep.checks.size() >= 15);
  const std::string text = verify_report_text(rep);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("ALL CHECKS PASSED") != std::string::npos);
  for (const auto& c : rep.checks) CHECK(c.instances > 0);
}

TEST_CASE("unknown tier is rejected") {
  CHECK_THROWS_AS(verify_suite(VerifyOptions{"medium", 0}), ConfigError);
}
