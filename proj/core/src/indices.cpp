#include "fairvote/indices.hpp"

#include <stdexcept>

#include "fairvote/errors.hpp"

namespace fairvote {

bool IndexVector::all_equal() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[0]) return false;
  }
  return true;
}

std::vector<std::string> IndexVector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

namespace {

// Rows of Pascal's triangle used by both index formulas: C(n-1, k-1).
std::vector<BigInt> choose_row(int n) {
  std::vector<BigInt> row(n + 1);
  for (int k = 1; k <= n; ++k) row[k] = binomial(n - 1, k - 1);
  return row;
}

}  // namespace

IndexVector shapley_shubik(const VotingRule& rule, IndexMethod method) {
  const int n = rule.voters();
  IndexVector result{n, {}};
  result.values.reserve(n);
  auto row = choose_row(n);
  if (method == IndexMethod::Pivotal) {
    // phi_i = sum_k |B_i^(k)| / (n * C(n-1, k-1)); the coefficient is the
    // reduced form of (k-1)!(n-k)!/n!.
    CountMatrix b = pivotal_counts(rule).second;
    for (int i = 1; i <= n; ++i) {
      Rational phi = 0;
      for (int k = 1; k <= n; ++k) {
        if (b.at(k, i) == 0) continue;
        phi += Rational(BigInt(b.at(k, i)), n * row[k]);
      }
      result.values.push_back(phi);
    }
  } else {
    CountMatrix w = winning_counts(rule);
    for (int i = 1; i <= n; ++i) {
      Rational sum = 0;
      for (int k = 1; k <= n; ++k) {
        if (w.at(k, i) == 0) continue;
        sum += Rational(BigInt(w.at(k, i)), n * row[k]);
      }
      result.values.push_back(2 * sum - 1);
    }
  }
  return result;
}

IndexVector banzhaf(const VotingRule& rule, IndexMethod method) {
  const int n = rule.voters();
  IndexVector result{n, {}};
  result.values.reserve(n);
  const BigInt half_space = BigInt(1) << (n - 1);
  if (method == IndexMethod::Pivotal) {
    CountMatrix b = pivotal_counts(rule).second;
    for (int i = 1; i <= n; ++i) {
      BigInt pivots = 0;
      for (int k = 1; k <= n; ++k) pivots += b.at(k, i);
      result.values.push_back(Rational(pivots, half_space));
    }
  } else {
    // beta_i = -1 + 2^(2-n) * sum_k w_i^(k), written with a positive power.
    CountMatrix w = winning_counts(rule);
    for (int i = 1; i <= n; ++i) {
      BigInt winning = 0;
      for (int k = 1; k <= n; ++k) winning += w.at(k, i);
      result.values.push_back(Rational(4 * winning, BigInt(1) << n) - 1);
    }
  }
  return result;
}

Rational PivotPolynomial::evaluate(const Rational& p) const {
  const Rational q = 1 - p;
  std::vector<Rational> p_pow(n + 1), q_pow(n + 1);
  p_pow[0] = q_pow[0] = 1;
  for (int t = 1; t <= n; ++t) {
    p_pow[t] = p_pow[t - 1] * p;
    q_pow[t] = q_pow[t - 1] * q;
  }
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    if (coeffs[k] == 0) continue;
    sum += BigInt(coeffs[k]) * p_pow[k] * q_pow[n - k];
  }
  return sum;
}

PivotPolynomial p_biased_polynomial(const VotingRule& rule, int voter) {
  const int n = rule.voters();
  if (voter < 1 || voter > n) throw std::invalid_argument("invalid voter id");
  CountMatrix a = pivotal_counts(rule).first;
  PivotPolynomial poly{n, std::vector<std::uint64_t>(n + 1, 0)};
  for (int k = 0; k <= n; ++k) poly.coeffs[k] = a.at(k, voter);
  return poly;
}

UnbiasedResult is_unbiased(const VotingRule& rule) {
  CountMatrix w = winning_counts(rule);
  auto w_mismatch = w.first_row_mismatch();

  // The per-size A- and B-count criteria are equivalent; a disagreement
  // would mean a counting bug, not a property of the rule.
  auto [a, b] = pivotal_counts(rule);
  bool by_w = !w_mismatch.has_value();
  bool by_a = !a.first_row_mismatch().has_value();
  bool by_b = !b.first_row_mismatch().has_value();
  detail::internal_check(by_w == by_a && by_w == by_b,
                         "unbiasedness criteria disagree across count matrices");

  UnbiasedResult result;
  result.unbiased = by_w;
  if (w_mismatch) {
    result.witness = UnbiasedResult::Witness{w_mismatch->i, w_mismatch->j, w_mismatch->k};
  }
  return result;
}

bool is_ss_fair(const VotingRule& rule) {
  return shapley_shubik(rule, IndexMethod::WinningCounts).all_equal();
}

bool is_banzhaf_fair(const VotingRule& rule) {
  return banzhaf(rule, IndexMethod::WinningCounts).all_equal();
}

bool ss_fair_identity_check(const VotingRule& rule) {
  if (!is_ss_fair(rule)) {
    throw std::invalid_argument("ss_fair_identity_check requires an SS-fair rule");
  }
  const int n = rule.voters();
  CountMatrix w = winning_counts(rule);
  auto row = choose_row(n);
  const Rational expected = n + 1;
  for (int i = 1; i <= n; ++i) {
    Rational sum = 0;
    for (int k = 1; k <= n; ++k) {
      sum += Rational(BigInt(w.at(k, i)), row[k]);
    }
    if (2 * sum != expected) return false;
  }
  return true;
}

}  // namespace fairvote
