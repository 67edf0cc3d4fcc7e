#ifndef FAIRVOTE_INDICES_HPP
#define FAIRVOTE_INDICES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fairvote/counts.hpp"
#include "fairvote/numbers.hpp"
#include "fairvote/rule.hpp"

namespace fairvote {

// Exact per-voter influence indices. All arithmetic is rational; there is no
// floating point anywhere in a fairness verdict.
struct IndexVector {
  int n = 0;
  std::vector<Rational> values;  // one per voter, index 0 is voter 1

  bool all_equal() const;
  std::vector<std::string> to_strings() const;  // "p/q" forms
};

// The two computation routes. Pivotal sums the per-size pivot counts
// (B-matrix); WinningCounts uses the -1 + 2 * sum(w_i / (n C(n-1,k-1)))
// rewrite for Shapley-Shubik and -1 + 2^(2-n) * sum(w_i) for Banzhaf.
// The routes must agree exactly on every valid rule.
enum class IndexMethod { Pivotal, WinningCounts };

IndexVector shapley_shubik(const VotingRule& rule, IndexMethod method);
IndexVector banzhaf(const VotingRule& rule, IndexMethod method);

// Pivot-probability polynomial of one voter under p-biased voting:
// beta_i(p) = sum_k coeffs[k] p^k (1-p)^(n-k), coeffs[k] = |A_i^(k)|.
struct PivotPolynomial {
  int n = 0;
  std::vector<std::uint64_t> coeffs;  // index k in 0..n

  Rational evaluate(const Rational& p) const;
};

PivotPolynomial p_biased_polynomial(const VotingRule& rule, int voter);

struct UnbiasedResult {
  bool unbiased = false;
  struct Witness {
    int i, j, k;  // w_i^(k) != w_j^(k), smallest (k, i, j)
  };
  std::optional<Witness> witness;
};

// Equal per-size winning-coalition counts across voters. The verdict is
// cross-checked against the A- and B-matrix criteria, which are equivalent.
UnbiasedResult is_unbiased(const VotingRule& rule);

bool is_ss_fair(const VotingRule& rule);
bool is_banzhaf_fair(const VotingRule& rule);

// For a Shapley-Shubik-fair rule, verifies the exact rational identity
// 2 * sum_k w_i^(k) / C(n-1, k-1) = n + 1 for every voter. Throws
// std::invalid_argument if the rule is not SS-fair.
bool ss_fair_identity_check(const VotingRule& rule);

}  // namespace fairvote

#endif  // FAIRVOTE_INDICES_HPP
