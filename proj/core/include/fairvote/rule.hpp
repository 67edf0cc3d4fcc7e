#ifndef FAIRVOTE_RULE_HPP
#define FAIRVOTE_RULE_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fairvote/bit_table.hpp"
#include "fairvote/coalition.hpp"

namespace fairvote {

// A resolute two-candidate voting rule f : 2^N -> {0,1}, stored as one of:
//   - MwcList:    the antichain of minimal winning coalitions, with the full
//                 winning family implied by upward closure;
//   - Table:      an explicit 2^n-bit membership table (n <= 24);
//   - HalfFamily: a family T of n/2-sized sets (n even), winning iff
//                 |S| > n/2 or S is listed. Lets per-size counting run on
//                 the family alone instead of a 2^n sweep.
// Rules are immutable; construction does structural checks only, the axiom
// checks live in validate().
class VotingRule {
 public:
  enum class Repr { MwcList, Table, HalfFamily };

  // Checks masks fit n, dedups are rejected, and the list is an antichain.
  static VotingRule from_mwcs(int n, std::vector<Coalition> mwcs);
  static VotingRule from_table(BitTable table);
  // Checks n even and every set of size exactly n/2; complementarity is a
  // validity question, not a construction one.
  static VotingRule from_half_family(int n, std::vector<Coalition> sets);

  int voters() const { return n_; }
  Repr repr() const { return repr_; }

  int evaluate_mask(Mask s) const;
  // Throws std::invalid_argument on a voter-count mismatch.
  int evaluate(const Coalition& s) const;

  // Repr-specific accessors; throw std::logic_error on the wrong repr.
  const std::vector<Coalition>& mwc_list() const;
  const std::vector<Coalition>& half_family() const;
  const BitTable& table() const;

  // Table-backed copy of this rule (identity on Table repr); n <= 24.
  VotingRule materialized() const;

 private:
  VotingRule(int n, Repr repr) : n_(n), repr_(repr) {}

  int n_;
  Repr repr_;
  std::vector<Coalition> sets_;          // MwcList / HalfFamily, sorted by mask
  std::vector<Mask> sorted_masks_;       // same order, for membership tests
  std::shared_ptr<const BitTable> table_;
};

// Upward closure of a family as a membership table (n <= 24).
BitTable upward_closure(int n, const std::vector<Coalition>& family);

// The antichain of minimal winning coalitions, sorted by mask.
std::vector<Coalition> minimal_winning_coalitions(const VotingRule& rule);

struct IntersectionCheck {
  bool intersecting = true;
  std::optional<std::pair<Coalition, Coalition>> disjoint_pair;
};

// True iff every pair of coalitions meets; otherwise reports the first
// disjoint pair in list order.
IntersectionCheck check_intersecting(const std::vector<Coalition>& family);

struct ValidationReport {
  bool monotone = true;
  // f(first) = 1 but f(second) = 0 with first a subset of second.
  std::optional<std::pair<Coalition, Coalition>> monotone_witness;
  bool neutral_resolute = true;
  // Complement pair on which f takes the same value.
  std::optional<std::pair<Coalition, Coalition>> neutrality_witness;

  bool ok() const { return monotone && neutral_resolute; }
};

// Exhaustive axiom check; first counterexamples in ascending mask order.
// Needs n <= 24, except that half-family rules of any size are checked
// structurally through family complementarity.
ValidationReport validate(const VotingRule& rule);

namespace detail {
// The structural path on its own, so tests can compare it against the
// exhaustive sweep at sizes where both run.
ValidationReport validate_half_structural(const VotingRule& rule);
}  // namespace detail

}  // namespace fairvote

#endif  // FAIRVOTE_RULE_HPP
