#include "rule_gen.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace fairvote::testgen {

VotingRule random_valid_rule(int n, std::mt19937_64& rng, double win_prob) {
  if (n < 1 || n > 16) throw std::invalid_argument("random rules capped at n <= 16");
  const Mask full = full_mask(n);
  const std::uint64_t universe = std::uint64_t{1} << n;

  std::vector<std::uint8_t> winning(universe, 0);
  std::vector<std::uint8_t> has_winning_subset(universe, 0);
  auto mark = [&](Mask m) {
    winning[m] = 1;
    for (Mask s = m;; s = (s + 1) | m) {
      has_winning_subset[s] = 1;
      if (s == full) break;
    }
  };

  std::vector<Mask> lower;
  for (Mask m = 1; m < universe; ++m) {
    if (2 * std::popcount(m) < n) lower.push_back(m);
  }
  std::stable_sort(lower.begin(), lower.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::bernoulli_distribution wins(win_prob);
  for (Mask m : lower) {
    if (has_winning_subset[m]) {
      mark(m);  // monotonicity leaves no choice
    } else if (!has_winning_subset[m ^ full] && wins(rng)) {
      mark(m);  // free, and no disjoint winner blocks it
    }
  }

  std::bernoulli_distribution coin(0.5);
  BitTable table(n);
  if (n % 2 == 0) {
    for (Mask p = 1; p < universe; ++p) {
      if (!(p & 1) || 2 * std::popcount(p) != n) continue;
      Mask q = p ^ full;
      bool take_p;
      if (has_winning_subset[p]) {
        take_p = true;
      } else if (has_winning_subset[q]) {
        take_p = false;
      } else {
        take_p = coin(rng);
      }
      table.set(take_p ? p : q);
    }
  }
  for (Mask m = 0; m < universe; ++m) {
    int twice = 2 * std::popcount(m);
    if (twice < n) {
      if (winning[m]) table.set(m);
    } else if (twice > n) {
      if (!winning[m ^ full]) table.set(m);
    }
  }
  return VotingRule::from_table(std::move(table));
}

}  // namespace fairvote::testgen
