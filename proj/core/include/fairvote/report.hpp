#ifndef FAIRVOTE_REPORT_HPP
#define FAIRVOTE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fairvote/indices.hpp"
#include "fairvote/rule.hpp"

namespace fairvote {

// Everything `check` reports about one rule. Indices and fairness verdicts
// are only present when the rule is valid.
struct RuleReport {
  int n = 0;
  bool valid = false;
  ValidationReport validation;
  std::optional<IndexVector> shapley;
  std::optional<IndexVector> banzhaf;
  std::optional<bool> ss_fair;
  std::optional<bool> banzhaf_fair;
  std::optional<bool> unbiased;
  std::optional<UnbiasedResult::Witness> unbiased_witness;
  std::optional<bool> equitable;
  std::optional<std::vector<std::vector<int>>> voter_orbits;
};

// Runs validation, both index routes (they are cross-checked and must agree
// exactly), and the fairness predicates; the equitability search only when
// asked for.
RuleReport analyze_rule(const VotingRule& rule, bool with_equitable);

// Stable-ordered JSON: keys n, valid, shapley, banzhaf, ss_fair,
// banzhaf_fair, unbiased, equitable, witness; rationals as "p/q" strings;
// absent values are null. Two-space indent, trailing newline.
std::string report_to_json(const RuleReport& report);

}  // namespace fairvote

#endif  // FAIRVOTE_REPORT_HPP
