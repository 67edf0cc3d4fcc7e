#include "fairvote/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "fairvote/counts.hpp"
#include "fairvote/errors.hpp"
#include "fairvote/indices.hpp"
#include "fairvote/numbers.hpp"
#include "fairvote/symmetry.hpp"

namespace fairvote {

namespace {

// Backtracking state. The free variables of a monotone/neutral/resolute
// rule are the memberships of the coalitions below the middle layer plus
// one bit per complement pair on the middle layer (even n); everything
// above is the complement of something below. The legality conditions are:
//   - the empty set never wins;
//   - no two disjoint winning sets below the middle (that is the monotone
//     coupling across the complement map);
//   - a set with a winning subset wins.
struct Enumerator {
  int n;
  Mask full;
  std::uint64_t universe;
  std::vector<Mask> lower;         // size-ascending, mask-ascending
  std::vector<Mask> middle_pairs;  // members containing voter 1, ascending
  std::vector<std::uint8_t> winning_lower;   // decided lower sets
  std::vector<std::uint8_t> has_winning_subset;  // closure over all masks
  std::vector<std::uint8_t> middle_side;     // 1 if the keyed member wins
  const std::function<void(const VotingRule&)>* visit;

  explicit Enumerator(int voters)
      : n(voters),
        full(full_mask(voters)),
        universe(std::uint64_t{1} << voters),
        winning_lower(universe, 0),
        has_winning_subset(universe, 0),
        middle_side(universe, 0) {
    for (Mask m = 0; m < universe; ++m) {
      if (2 * std::popcount(m) < n) lower.push_back(m);
      if (n % 2 == 0 && 2 * std::popcount(m) == n && (m & 1)) {
        middle_pairs.push_back(m);
      }
    }
    std::stable_sort(lower.begin(), lower.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
  }

  // Marks m winning and spreads the subset-closure to all supersets,
  // recording flipped entries for backtracking.
  void mark_winning(Mask m, std::vector<Mask>& flipped) {
    winning_lower[m] = 1;
    for (Mask s = m;; s = (s + 1) | m) {
      if (!has_winning_subset[s]) {
        has_winning_subset[s] = 1;
        flipped.push_back(s);
      }
      if (s == full) break;
    }
  }

  void unmark(Mask m, const std::vector<Mask>& flipped) {
    winning_lower[m] = 0;
    for (Mask s : flipped) has_winning_subset[s] = 0;
  }

  void emit() {
    BitTable table(n);
    for (Mask m = 0; m < universe; ++m) {
      int twice = 2 * std::popcount(m);
      bool wins;
      if (twice < n) {
        wins = winning_lower[m];
      } else if (twice > n) {
        wins = !winning_lower[m ^ full];
      } else {
        Mask keyed = (m & 1) ? m : (m ^ full);
        wins = (m & 1) ? middle_side[keyed] : !middle_side[keyed];
      }
      if (wins) table.set(m);
    }
    (*visit)(VotingRule::from_table(std::move(table)));
  }

  void solve_middle(std::size_t pair_index) {
    if (pair_index == middle_pairs.size()) {
      emit();
      return;
    }
    Mask p = middle_pairs[pair_index];
    Mask q = p ^ full;
    bool p_forced = has_winning_subset[p];
    bool q_forced = has_winning_subset[q];
    detail::internal_check(!(p_forced && q_forced),
                           "disjoint winning sets slipped through");
    if (!q_forced) {
      middle_side[p] = 1;
      solve_middle(pair_index + 1);
    }
    if (!p_forced) {
      middle_side[p] = 0;
      solve_middle(pair_index + 1);
    }
  }

  void solve_lower(std::size_t index) {
    if (index == lower.size()) {
      solve_middle(0);
      return;
    }
    Mask m = lower[index];
    if (m == 0) {
      // The empty set is disjoint from itself; it can never win.
      solve_lower(index + 1);
      return;
    }
    if (has_winning_subset[m]) {
      // Monotonicity forces this set to win.
      std::vector<Mask> flipped;
      mark_winning(m, flipped);
      solve_lower(index + 1);
      unmark(m, flipped);
      return;
    }
    // Losing branch first, then winning when no disjoint winner exists.
    solve_lower(index + 1);
    if (!has_winning_subset[m ^ full]) {
      std::vector<Mask> flipped;
      mark_winning(m, flipped);
      solve_lower(index + 1);
      unmark(m, flipped);
    }
  }
};

}  // namespace

void enumerate_rules(int n, const std::function<void(const VotingRule&)>& visit) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("enumerate_rules supports 1 <= n <= 7");
  }
  Enumerator e(n);
  e.visit = &visit;
  e.solve_lower(0);
}

namespace {

bool satisfies(const VotingRule& rule, Fairness fairness) {
  switch (fairness) {
    case Fairness::SS: return is_ss_fair(rule);
    case Fairness::Banzhaf: return is_banzhaf_fair(rule);
    case Fairness::Unbiased: return is_unbiased(rule).unbiased;
    case Fairness::Equitable: return is_equitable(rule).equitable;
  }
  return false;
}

}  // namespace

std::uint64_t count_fair(int n, Fairness fairness) {
  std::uint64_t count = 0;
  enumerate_rules(n, [&](const VotingRule& rule) {
    if (satisfies(rule, fairness)) ++count;
  });
  return count;
}

EnumerationReport enumeration_report(int n, bool with_equitable) {
  EnumerationReport report;
  report.n = n;
  if (with_equitable) report.equitable = 0;
  enumerate_rules(n, [&](const VotingRule& rule) {
    report.total_rules++;
    if (is_ss_fair(rule)) report.ss_fair++;
    if (is_banzhaf_fair(rule)) report.banzhaf_fair++;
    if (is_unbiased(rule).unbiased) report.unbiased++;
    if (report.equitable && is_equitable(rule).equitable) (*report.equitable)++;
  });
  return report;
}

std::vector<int> power_of_two_obstruction(int n) {
  if (n < 2 || !is_power_of_two(static_cast<std::uint64_t>(n))) {
    throw std::invalid_argument("power_of_two_obstruction: n must be a power of two >= 2");
  }
  std::vector<int> parities;
  parities.reserve(n);
  for (int k = 1; k <= n; ++k) {
    parities.push_back(lucas_parity(n - 1, k - 1));
  }
  detail::internal_check(
      std::all_of(parities.begin(), parities.end(), [](int p) { return p == 1; }),
      "row n-1 of Pascal's triangle should be odd throughout");
  return parities;
}

}  // namespace fairvote
