#include "fairvote/rule.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "fairvote/errors.hpp"
#include "fairvote/numbers.hpp"

namespace fairvote {

namespace {

void check_voter_count(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("voter count must be in 1..64");
}

// Masks sorted ascending, no duplicates, all within the low n bits.
std::vector<Coalition> canonicalize(int n, std::vector<Coalition> sets,
                                    const char* what) {
  Mask full = full_mask(n);
  for (auto& s : sets) {
    if (s.n != n) throw std::invalid_argument(std::string(what) + ": voter count mismatch");
    if ((s.bits & ~full) != 0) {
      throw std::invalid_argument(std::string(what) + ": coalition outside electorate");
    }
  }
  std::sort(sets.begin(), sets.end());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (sets[i].bits == sets[i - 1].bits) {
      throw std::invalid_argument(std::string(what) + ": duplicate coalition " +
                                  to_string(sets[i]));
    }
  }
  return sets;
}

std::vector<Mask> mask_view(const std::vector<Coalition>& sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) masks.push_back(s.bits);
  return masks;
}

}  // namespace

VotingRule VotingRule::from_mwcs(int n, std::vector<Coalition> mwcs) {
  check_voter_count(n);
  VotingRule rule(n, Repr::MwcList);
  rule.sets_ = canonicalize(n, std::move(mwcs), "mwc list");

  // Antichain check. Sets of equal size cannot nest, so only cross-size
  // pairs need a subset test; a single-size family (majority) costs nothing.
  std::map<int, std::vector<Mask>> by_size;
  for (const auto& s : rule.sets_) by_size[s.size()].push_back(s.bits);
  for (auto small_it = by_size.begin(); small_it != by_size.end(); ++small_it) {
    for (auto large_it = std::next(small_it); large_it != by_size.end(); ++large_it) {
      for (Mask small : small_it->second) {
        for (Mask large : large_it->second) {
          if ((small & large) == small) {
            throw std::invalid_argument(
                "mwc list is not an antichain: " + to_string(Coalition{small, n}) +
                " is a subset of " + to_string(Coalition{large, n}));
          }
        }
      }
    }
  }

  rule.sorted_masks_ = mask_view(rule.sets_);
  return rule;
}

VotingRule VotingRule::from_table(BitTable table) {
  VotingRule rule(table.voters(), Repr::Table);
  rule.table_ = std::make_shared<const BitTable>(std::move(table));
  return rule;
}

VotingRule VotingRule::from_half_family(int n, std::vector<Coalition> sets) {
  check_voter_count(n);
  if (n % 2 != 0) throw std::invalid_argument("half family requires an even voter count");
  VotingRule rule(n, Repr::HalfFamily);
  rule.sets_ = canonicalize(n, std::move(sets), "half family");
  for (const auto& s : rule.sets_) {
    if (s.size() != n / 2) {
      throw std::invalid_argument("half family: " + to_string(s) +
                                  " does not have size " + std::to_string(n / 2));
    }
  }
  rule.sorted_masks_ = mask_view(rule.sets_);
  return rule;
}

int VotingRule::evaluate_mask(Mask s) const {
  switch (repr_) {
    case Repr::Table:
      return table_->test(s) ? 1 : 0;
    case Repr::MwcList:
      for (Mask w : sorted_masks_) {
        if ((w & s) == w) return 1;
      }
      return 0;
    case Repr::HalfFamily: {
      int twice = 2 * std::popcount(s);
      if (twice > n_) return 1;
      if (twice < n_) return 0;
      return std::binary_search(sorted_masks_.begin(), sorted_masks_.end(), s) ? 1 : 0;
    }
  }
  return 0;
}

int VotingRule::evaluate(const Coalition& s) const {
  if (s.n != n_) throw std::invalid_argument("coalition/rule voter count mismatch");
  return evaluate_mask(s.bits);
}

const std::vector<Coalition>& VotingRule::mwc_list() const {
  detail::internal_check(repr_ == Repr::MwcList, "rule is not mwc-backed");
  return sets_;
}

const std::vector<Coalition>& VotingRule::half_family() const {
  detail::internal_check(repr_ == Repr::HalfFamily, "rule is not half-family-backed");
  return sets_;
}

const BitTable& VotingRule::table() const {
  detail::internal_check(repr_ == Repr::Table, "rule is not table-backed");
  return *table_;
}

VotingRule VotingRule::materialized() const {
  if (repr_ == Repr::Table) return *this;
  if (n_ > BitTable::kMaxVoters) {
    throw std::invalid_argument("n too large for an explicit membership table");
  }
  if (repr_ == Repr::MwcList) {
    return from_table(upward_closure(n_, sets_));
  }
  BitTable table(n_);
  const std::uint64_t universe = table.universe();
  for (Mask m = 0; m < universe; ++m) {
    if (evaluate_mask(m)) table.set(m);
  }
  return from_table(std::move(table));
}

BitTable upward_closure(int n, const std::vector<Coalition>& family) {
  if (n > BitTable::kMaxVoters) {
    throw std::invalid_argument("n too large for an explicit membership table");
  }
  BitTable table(n);
  for (const auto& s : family) {
    if (s.n != n) throw std::invalid_argument("upward_closure: voter count mismatch");
    table.set(s.bits);
  }
  // Removing a bit only decreases the mask, so one ascending pass closes the
  // family upward.
  const std::uint64_t universe = table.universe();
  for (Mask m = 1; m < universe; ++m) {
    if (table.test(m)) continue;
    Mask rest = m;
    while (rest) {
      Mask low = rest & (~rest + 1);
      if (table.test(m ^ low)) {
        table.set(m);
        break;
      }
      rest ^= low;
    }
  }
  return table;
}

std::vector<Coalition> minimal_winning_coalitions(const VotingRule& rule) {
  if (rule.repr() == VotingRule::Repr::MwcList) return rule.mwc_list();
  VotingRule dense = rule.materialized();
  const BitTable& table = dense.table();
  std::vector<Coalition> mwcs;
  const std::uint64_t universe = table.universe();
  for (Mask m = 0; m < universe; ++m) {
    if (!table.test(m)) continue;
    bool minimal = true;
    Mask rest = m;
    while (rest) {
      Mask low = rest & (~rest + 1);
      if (table.test(m ^ low)) {
        minimal = false;
        break;
      }
      rest ^= low;
    }
    if (minimal) mwcs.push_back(Coalition{m, rule.voters()});
  }
  return mwcs;
}

IntersectionCheck check_intersecting(const std::vector<Coalition>& family) {
  IntersectionCheck result;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].n != family.front().n) {
      throw std::invalid_argument("check_intersecting: voter count mismatch");
    }
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if ((family[i].bits & family[j].bits) == 0) {
        result.intersecting = false;
        result.disjoint_pair = {family[i], family[j]};
        return result;
      }
    }
  }
  return result;
}

namespace {

ValidationReport validate_exhaustive(const VotingRule& rule) {
  ValidationReport report;
  const int n = rule.voters();
  VotingRule dense = rule.materialized();
  const BitTable& table = dense.table();
  const std::uint64_t universe = table.universe();

  for (Mask m = 1; m < universe && report.monotone; ++m) {
    if (table.test(m)) continue;
    // A losing set with a winning one-voter-smaller subset breaks
    // monotonicity; scan voters ascending for the first witness.
    Mask rest = m;
    while (rest) {
      Mask low = rest & (~rest + 1);
      if (table.test(m ^ low)) {
        report.monotone = false;
        report.monotone_witness = {Coalition{m ^ low, n}, Coalition{m, n}};
        break;
      }
      rest ^= low;
    }
  }

  const Mask full = full_mask(n);
  for (Mask m = 0; m < universe; ++m) {
    Mask c = m ^ full;
    if (m > c) continue;  // visit each complement pair once, at its low member
    if (table.test(m) == table.test(c)) {
      report.neutral_resolute = false;
      report.neutrality_witness = {Coalition{m, n}, Coalition{c, n}};
      break;
    }
  }
  return report;
}

}  // namespace

namespace detail {

// Half-family rules beyond the table cap: monotonicity is structural, and
// neutrality/resoluteness reduces to family complementarity.
ValidationReport validate_half_structural(const VotingRule& rule) {
  ValidationReport report;
  const int n = rule.voters();
  const Mask full = full_mask(n);
  const auto& sets = rule.half_family();

  for (const auto& s : sets) {
    Mask c = s.bits ^ full;
    if (rule.evaluate_mask(c)) {
      Mask low = std::min(s.bits, c);
      report.neutral_resolute = false;
      report.neutrality_witness = {Coalition{low, n}, Coalition{low ^ full, n}};
      return report;
    }
  }
  // No pair is doubly covered, so the family is complementary iff it covers
  // half of the middle layer.
  BigInt expected = binomial(n, n / 2) / 2;
  if (BigInt(sets.size()) != expected) {
    report.neutral_resolute = false;
    // Find the first uncovered pair for the witness.
    Mask m = full_mask(n / 2);
    const Mask highest = full ^ full_mask(n - n / 2);
    for (;;) {
      if (!rule.evaluate_mask(m) && !rule.evaluate_mask(m ^ full)) {
        report.neutrality_witness = {Coalition{m, n}, Coalition{m ^ full, n}};
        break;
      }
      if (m == highest) break;
      m = next_same_popcount(m);
    }
  }
  return report;
}

}  // namespace detail

ValidationReport validate(const VotingRule& rule) {
  if (rule.voters() <= BitTable::kMaxVoters) return validate_exhaustive(rule);
  if (rule.repr() == VotingRule::Repr::HalfFamily) {
    return detail::validate_half_structural(rule);
  }
  throw std::invalid_argument("n too large for exhaustive validation");
}

}  // namespace fairvote
