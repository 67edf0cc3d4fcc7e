#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fairvote/construct.hpp"
#include "fairvote/enumerate.hpp"
#include "fairvote/indices.hpp"

#include "support/oracles.hpp"
#include "support/rule_gen.hpp"

using namespace fairvote;

namespace {

VotingRule dictator(int n) {
  BitTable table(n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (m & 1) table.set(m);
  }
  return VotingRule::from_table(std::move(table));
}

}  // namespace

TEST_CASE("fig3 indices match the published values") {
  VotingRule rule = example_rule(ExampleRule::Fig3);
  for (auto method : {IndexMethod::Pivotal, IndexMethod::WinningCounts}) {
    IndexVector ss = shapley_shubik(rule, method);
    CHECK(ss.values[0] == Rational(1, 2));
    CHECK(ss.values[1] == Rational(1, 6));
    CHECK(ss.values[2] == Rational(1, 6));
    CHECK(ss.values[3] == Rational(1, 6));
    IndexVector bz = banzhaf(rule, method);
    CHECK(bz.values[0] == Rational(3, 4));
    CHECK(bz.values[1] == Rational(1, 4));
    CHECK(bz.values[2] == Rational(1, 4));
    CHECK(bz.values[3] == Rational(1, 4));
  }
}

TEST_CASE("dictator and majority indices") {
  for (int n : {2, 3, 5}) {
    IndexVector ss = shapley_shubik(dictator(n), IndexMethod::Pivotal);
    CHECK(ss.values[0] == 1);
    for (int i = 1; i < n; ++i) CHECK(ss.values[i] == 0);
    IndexVector bz = banzhaf(dictator(n), IndexMethod::WinningCounts);
    CHECK(bz.values[0] == 1);
    for (int i = 1; i < n; ++i) CHECK(bz.values[i] == 0);
  }

  IndexVector ss3 = shapley_shubik(majority_rule(3), IndexMethod::WinningCounts);
  for (const auto& v : ss3.values) CHECK(v == Rational(1, 3));
  IndexVector bz3 = banzhaf(majority_rule(3), IndexMethod::Pivotal);
  for (const auto& v : bz3.values) CHECK(v == Rational(1, 2));

  // Single voter: the lone voter is the whole electorate.
  IndexVector ss1 = shapley_shubik(majority_rule(1), IndexMethod::WinningCounts);
  CHECK(ss1.values[0] == 1);
  IndexVector bz1 = banzhaf(majority_rule(1), IndexMethod::WinningCounts);
  CHECK(bz1.values[0] == 1);
}

TEST_CASE("both routes match the definitional oracles") {
  std::mt19937_64 rng(37);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      VotingRule rule = testgen::random_valid_rule(n, rng);
      IndexVector by_orderings = oracles::shapley_by_orderings(rule);
      CHECK(shapley_shubik(rule, IndexMethod::Pivotal).values == by_orderings.values);
      CHECK(shapley_shubik(rule, IndexMethod::WinningCounts).values ==
            by_orderings.values);
      IndexVector by_subsets = oracles::banzhaf_by_subsets(rule);
      CHECK(banzhaf(rule, IndexMethod::Pivotal).values == by_subsets.values);
      CHECK(banzhaf(rule, IndexMethod::WinningCounts).values == by_subsets.values);
    }
  }
}

TEST_CASE("indices are probabilities and Shapley-Shubik sums to one") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      VotingRule rule = testgen::random_valid_rule(n, rng);
      IndexVector ss = shapley_shubik(rule, IndexMethod::WinningCounts);
      Rational sum = 0;
      for (const auto& v : ss.values) {
        CHECK(v >= 0);
        CHECK(v <= 1);
        sum += v;
      }
      CHECK(sum == 1);
      for (const auto& v : banzhaf(rule, IndexMethod::Pivotal).values) {
        CHECK(v >= 0);
        CHECK(v <= 1);
      }
    }
  }
}

TEST_CASE("pivot polynomial pinned examples") {
  PivotPolynomial dict = p_biased_polynomial(dictator(2), 1);
  CHECK(dict.coeffs == std::vector<std::uint64_t>{1, 2, 1});
  CHECK(dict.evaluate(Rational(1, 2)) == 1);

  PivotPolynomial maj = p_biased_polynomial(majority_rule(3), 2);
  CHECK(maj.coeffs == std::vector<std::uint64_t>{0, 2, 2, 0});
  CHECK(maj.evaluate(Rational(1, 2)) == Rational(1, 2));

  VotingRule fig3 = example_rule(ExampleRule::Fig3);
  PivotPolynomial voter_a = p_biased_polynomial(fig3, 1);
  CHECK(voter_a.evaluate(Rational(1, 2)) == Rational(3, 4));
  CHECK_THROWS_AS(p_biased_polynomial(fig3, 5), std::invalid_argument);
}

TEST_CASE("pivot polynomial equals the Banzhaf index at one half") {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 9; ++n) {
    VotingRule rule = testgen::random_valid_rule(n, rng);
    IndexVector bz = banzhaf(rule, IndexMethod::Pivotal);
    for (int voter = 1; voter <= n; ++voter) {
      PivotPolynomial poly = p_biased_polynomial(rule, voter);
      CHECK(poly.evaluate(Rational(1, 2)) == bz.values[voter - 1]);
      for (int k = 0; k <= n; ++k) {
        CHECK(BigInt(poly.coeffs[k]) <= binomial(n, k));
      }
    }
  }
}

TEST_CASE("unbiasedness verdicts and witnesses") {
  CHECK(is_unbiased(majority_rule(3)).unbiased);
  CHECK(is_unbiased(majority_rule(7)).unbiased);
  CHECK(is_unbiased(example_rule(ExampleRule::AppendixB)).unbiased);

  UnbiasedResult fig3 = is_unbiased(example_rule(ExampleRule::Fig3));
  CHECK_FALSE(fig3.unbiased);
  REQUIRE(fig3.witness.has_value());
  CHECK(fig3.witness->i == 1);
  CHECK(fig3.witness->j == 2);
  CHECK(fig3.witness->k == 2);
}

TEST_CASE("unbiased rules are SS-fair and Banzhaf-fair") {
  std::mt19937_64 rng(47);
  int unbiased_seen = 0;
  for (int n = 2; n <= 9; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      VotingRule rule = testgen::random_valid_rule(n, rng);
      if (is_unbiased(rule).unbiased) {
        ++unbiased_seen;
        CHECK(is_ss_fair(rule));
        CHECK(is_banzhaf_fair(rule));
      }
    }
  }
  for (int n : {3, 5, 6, 7, 9, 10}) {
    VotingRule rule = unbiased_rule(n);
    REQUIRE(is_unbiased(rule).unbiased);
    CHECK(is_ss_fair(rule));
    CHECK(is_banzhaf_fair(rule));
  }
}

TEST_CASE("fairness predicates on the named rules") {
  CHECK(is_ss_fair(majority_rule(5)));
  CHECK(is_banzhaf_fair(majority_rule(5)));
  VotingRule fig3 = example_rule(ExampleRule::Fig3);
  CHECK_FALSE(is_ss_fair(fig3));
  CHECK_FALSE(is_banzhaf_fair(fig3));
}

TEST_CASE("SS-fair identity") {
  CHECK(ss_fair_identity_check(majority_rule(3)));
  CHECK(ss_fair_identity_check(majority_rule(5)));
  CHECK(ss_fair_identity_check(unbiased_rule(6)));
  CHECK_THROWS_AS(ss_fair_identity_check(example_rule(ExampleRule::Fig3)),
                  std::invalid_argument);
}

TEST_CASE("the four unbiasedness criteria agree on enumerated rules") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_rules(n, [&](const VotingRule& rule) {
      CountMatrix w = winning_counts(rule);
      auto [a, b] = pivotal_counts(rule);
      bool by_w = !w.first_row_mismatch().has_value();
      bool by_a = !a.first_row_mismatch().has_value();
      bool by_b = !b.first_row_mismatch().has_value();
      // Coefficient vectors of the pivot polynomials, compared across voters.
      bool by_poly = true;
      PivotPolynomial first = p_biased_polynomial(rule, 1);
      for (int voter = 2; voter <= n; ++voter) {
        if (p_biased_polynomial(rule, voter).coeffs != first.coeffs) by_poly = false;
      }
      CHECK(by_w == by_a);
      CHECK(by_w == by_b);
      CHECK(by_w == by_poly);
      CHECK(by_w == is_unbiased(rule).unbiased);
    });
  }
}
