#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fairvote/construct.hpp"
#include "fairvote/rule.hpp"

#include "support/oracles.hpp"
#include "support/rule_gen.hpp"

using namespace fairvote;

TEST_CASE("coalition_from_ids places bits") {
  CHECK(coalition_from_ids({}, 4).bits == 0);
  CHECK(coalition_from_ids({1, 2, 3, 4}, 4).bits == 0b1111);
  CHECK(coalition_from_ids({1, 4, 5, 7}, 9).bits == 0b001011001);
  CHECK(coalition_ids(coalition_from_ids({3, 1}, 4)) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(coalition_from_ids({0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(coalition_from_ids({5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(coalition_from_ids({2, 2}, 4), std::invalid_argument);
}

TEST_CASE("fig3 evaluation matches its verbal description") {
  VotingRule rule = example_rule(ExampleRule::Fig3);
  CHECK(rule.evaluate(coalition_from_ids({1}, 4)) == 0);
  CHECK(rule.evaluate(coalition_from_ids({1, 2}, 4)) == 1);
  CHECK(rule.evaluate(coalition_from_ids({1, 2, 3, 4}, 4)) == 1);
  CHECK(rule.evaluate(coalition_from_ids({2, 3, 4}, 4)) == 1);
  CHECK(rule.evaluate(coalition_from_ids({2, 3}, 4)) == 0);
  CHECK_THROWS_AS(rule.evaluate(coalition_from_ids({1}, 5)), std::invalid_argument);

  VotingRule semantic = oracles::fig3_semantic();
  CHECK(oracles::table_word(rule) == oracles::table_word(semantic));
}

TEST_CASE("grand coalition always wins on valid rules") {
  for (auto which : {ExampleRule::Fig3, ExampleRule::Maj3x3, ExampleRule::AppendixB,
                     ExampleRule::Prism}) {
    VotingRule rule = example_rule(which);
    CHECK(rule.evaluate_mask(full_mask(rule.voters())) == 1);
  }
}

TEST_CASE("validate passes the example rules") {
  for (auto which : {ExampleRule::Fig3, ExampleRule::Maj3x3, ExampleRule::AppendixB,
                     ExampleRule::Prism}) {
    ValidationReport report = validate(example_rule(which));
    CHECK(report.monotone);
    CHECK(report.neutral_resolute);
  }
}

TEST_CASE("validate rejects the everything-wins family") {
  // MWC list {∅} upward-closes to all of 2^N.
  VotingRule rule = VotingRule::from_mwcs(3, {Coalition{0, 3}});
  ValidationReport report = validate(rule);
  CHECK(report.monotone);
  CHECK_FALSE(report.neutral_resolute);
  REQUIRE(report.neutrality_witness.has_value());
  CHECK(report.neutrality_witness->first.bits == 0);   // first pair in mask order
  CHECK(report.neutrality_witness->second.bits == 0b111);
}

TEST_CASE("validate reports the first monotonicity break in mask order") {
  BitTable table(2);
  table.set(0b00);  // only the empty set wins
  VotingRule rule = VotingRule::from_table(std::move(table));
  ValidationReport report = validate(rule);
  CHECK_FALSE(report.monotone);
  REQUIRE(report.monotone_witness.has_value());
  CHECK(report.monotone_witness->first.bits == 0);
  CHECK(report.monotone_witness->second.bits == 0b01);
  CHECK_FALSE(report.neutral_resolute);
}

TEST_CASE("upward closure counts") {
  VotingRule fig3 = example_rule(ExampleRule::Fig3);
  CHECK(upward_closure(4, fig3.mwc_list()).count() == 8);  // 2^(4-1)

  VotingRule maj3 = majority_rule(3);
  CHECK(upward_closure(3, maj3.mwc_list()).count() == 4);

  VotingRule appb = example_rule(ExampleRule::AppendixB);
  CHECK(appb.materialized().table().count() == 256);  // 2^(9-1)
}

TEST_CASE("every validated rule wins exactly half of all coalitions") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      VotingRule rule = testgen::random_valid_rule(n, rng);
      REQUIRE(validate(rule).ok());
      CHECK(rule.table().count() == (std::uint64_t{1} << (n - 1)));
    }
  }
}

TEST_CASE("minimal winning coalitions") {
  VotingRule fig3 = example_rule(ExampleRule::Fig3);
  auto mwcs = minimal_winning_coalitions(fig3);
  REQUIRE(mwcs.size() == 4);
  CHECK(mwcs[0].bits == 0b0011);  // {1,2}
  CHECK(mwcs[1].bits == 0b0101);  // {1,3}
  CHECK(mwcs[2].bits == 0b1001);  // {1,4}
  CHECK(mwcs[3].bits == 0b1110);  // {2,3,4}

  // Dictator via a table.
  BitTable dict(3);
  for (Mask m = 0; m < 8; ++m) {
    if (m & 1) dict.set(m);
  }
  auto dict_mwcs = minimal_winning_coalitions(VotingRule::from_table(std::move(dict)));
  REQUIRE(dict_mwcs.size() == 1);
  CHECK(dict_mwcs[0].bits == 0b001);

  CHECK(minimal_winning_coalitions(majority_rule(5)).size() == 10);  // C(5,3)
}

TEST_CASE("closure and minimization invert each other") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      VotingRule rule = testgen::random_valid_rule(n, rng);
      auto mwcs = minimal_winning_coalitions(rule);
      CHECK(upward_closure(n, mwcs) == rule.table());
      // Minimizing the closed table recovers the antichain.
      auto again =
          minimal_winning_coalitions(VotingRule::from_table(upward_closure(n, mwcs)));
      CHECK(again == mwcs);
    }
  }
}

TEST_CASE("check_intersecting") {
  VotingRule appb = example_rule(ExampleRule::AppendixB);
  auto size4 = [&] {
    std::vector<Coalition> family;
    for (const auto& s : minimal_winning_coalitions(appb)) {
      if (s.size() == 4) family.push_back(s);
    }
    return family;
  }();
  REQUIRE(size4.size() == 9);
  CHECK(check_intersecting(size4).intersecting);

  auto disjoint = std::vector<Coalition>{coalition_from_ids({1, 3}, 4),
                                         coalition_from_ids({2, 4}, 4)};
  auto verdict = check_intersecting(disjoint);
  CHECK_FALSE(verdict.intersecting);
  REQUIRE(verdict.disjoint_pair.has_value());
  CHECK(verdict.disjoint_pair->first.bits == 0b0101);
  CHECK(verdict.disjoint_pair->second.bits == 0b1010);

  // All winning coalitions of a validated rule pairwise intersect.
  std::mt19937_64 rng(13);
  VotingRule rule = testgen::random_valid_rule(6, rng);
  std::vector<Coalition> winning;
  for (Mask m = 0; m < 64; ++m) {
    if (rule.evaluate_mask(m)) winning.push_back(Coalition{m, 6});
  }
  CHECK(winning.size() == 32);
  CHECK(check_intersecting(winning).intersecting);
}

TEST_CASE("from_mwcs rejects nested sets") {
  CHECK_THROWS_AS(VotingRule::from_mwcs(4, {coalition_from_ids({1, 2}, 4),
                                            coalition_from_ids({1, 2, 3}, 4)}),
                  std::invalid_argument);
}

TEST_CASE("half-family structural validation agrees with the exhaustive sweep") {
  for (int n : {6, 10, 12}) {
    HalfFamily family = complementary_balanced_family(n);
    VotingRule rule = VotingRule::from_half_family(n, family.sets);
    CHECK(detail::validate_half_structural(rule).ok());
    CHECK(validate(rule.materialized()).ok());

    // Break complementarity: replace one set by its complement's complement
    // twin (duplicate a pair) by removing one set entirely.
    auto broken_sets = family.sets;
    broken_sets.pop_back();
    VotingRule broken = VotingRule::from_half_family(n, broken_sets);
    auto structural = detail::validate_half_structural(broken);
    auto exhaustive = validate(broken.materialized());
    CHECK_FALSE(structural.ok());
    CHECK_FALSE(exhaustive.ok());
    REQUIRE(structural.neutrality_witness.has_value());
    REQUIRE(exhaustive.neutrality_witness.has_value());
    CHECK(structural.neutrality_witness->first.bits ==
          exhaustive.neutrality_witness->first.bits);
  }
}

TEST_CASE("validate caps out beyond the table limit for non-half rules") {
  // 25 voters, mwc repr: no exhaustive check possible.
  std::vector<Coalition> mwcs;
  Mask m = full_mask(13);
  for (int t = 0; t < 5; ++t) {
    mwcs.push_back(Coalition{m, 25});
    m = next_same_popcount(m);
  }
  VotingRule rule = VotingRule::from_mwcs(25, mwcs);
  CHECK_THROWS_AS(validate(rule), std::invalid_argument);
}
