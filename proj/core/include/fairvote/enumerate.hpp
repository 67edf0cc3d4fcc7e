#ifndef FAIRVOTE_ENUMERATE_HPP
#define FAIRVOTE_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairvote/rule.hpp"

namespace fairvote {

// Visits every monotone, neutral, resolute rule on n voters exactly once.
// Backtracks over the free choices: membership of each coalition smaller
// than n/2 (size-ascending, mask-ascending), then one bit per complement
// pair on the middle layer when n is even; everything larger is forced by
// neutrality. 1 <= n <= 7; n = 7 takes a couple of minutes of visitor work
// for its 1.4M rules.
void enumerate_rules(int n, const std::function<void(const VotingRule&)>& visit);

enum class Fairness { SS, Banzhaf, Unbiased, Equitable };

std::uint64_t count_fair(int n, Fairness fairness);

struct EnumerationReport {
  int n = 0;
  std::uint64_t total_rules = 0;
  std::uint64_t ss_fair = 0;
  std::uint64_t banzhaf_fair = 0;
  std::uint64_t unbiased = 0;
  // Priced separately: the symmetry search is the one super-polynomial
  // predicate, so it is skipped unless asked for (always on for n <= 6).
  std::optional<std::uint64_t> equitable;
};

EnumerationReport enumeration_report(int n, bool with_equitable);

// For n = 2^r, r >= 1: the parities of C(n-1, k-1) for k = 1..n, which are
// all odd — the obstruction that rules out SS-fair rules at powers of two.
// Throws std::invalid_argument when n is not a power of two.
std::vector<int> power_of_two_obstruction(int n);

}  // namespace fairvote

#endif  // FAIRVOTE_ENUMERATE_HPP
