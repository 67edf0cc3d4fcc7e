#include "fairvote/construct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "fairvote/errors.hpp"
#include "fairvote/numbers.hpp"

namespace fairvote {

namespace {

// Cyclic shift within g bits; s in [0, g), g < 64.
Mask rotate_mask(Mask m, int s, int g) {
  if (s == 0) return m;
  return ((m << s) | (m >> (g - s))) & full_mask(g);
}

std::vector<int> id_tuple(Mask m) {
  std::vector<int> ids;
  while (m) {
    ids.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return ids;
}

}  // namespace

DesignFamily design_half_family(int k) {
  if (k < 1) throw std::invalid_argument("design_half_family: k must be >= 1");
  if (k > 12) {
    throw std::invalid_argument("design_half_family: k beyond the desk-scale cap of 12");
  }
  // C(2k+1, k) is odd exactly when k+1 is a power of two.
  if (lucas_parity(2 * k + 1, k) == 1) {
    throw std::invalid_argument("design_half_family: C(2k+1, k) is odd for k=" +
                                std::to_string(k) + ", no half-measure family exists");
  }

  const int g = 2 * k + 1;
  std::vector<bool> seen(std::size_t{1} << g, false);

  // Orbits of the cyclic shift, keyed by their lexicographically smallest
  // member as a sorted id tuple. gcd(k, 2k+1) = 1 makes every orbit full
  // size.
  std::vector<std::pair<std::vector<int>, std::vector<Mask>>> orbits;
  for_each_subset_of_size(g, k, [&](Mask m) {
    if (seen[m]) return;
    std::vector<Mask> orbit;
    orbit.reserve(g);
    for (int s = 0; s < g; ++s) {
      Mask shifted = rotate_mask(m, s, g);
      detail::internal_check(!(s > 0 && shifted == m), "degenerate shift orbit");
      if (!seen[shifted]) {
        seen[shifted] = true;
        orbit.push_back(shifted);
      }
    }
    detail::internal_check(static_cast<int>(orbit.size()) == g,
                           "shift orbit has unexpected size");
    std::vector<int> key = id_tuple(orbit.front());
    for (Mask member : orbit) key = std::min(key, id_tuple(member));
    orbits.emplace_back(std::move(key), std::move(orbit));
  });

  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  detail::internal_check(orbits.size() % 2 == 0, "odd number of shift orbits");

  DesignFamily family{k, {}};
  family.sets.reserve(orbits.size() / 2 * g);
  std::vector<std::pair<std::vector<int>, Mask>> chosen;
  for (std::size_t o = 0; o < orbits.size() / 2; ++o) {
    for (Mask m : orbits[o].second) chosen.emplace_back(id_tuple(m), m);
  }
  std::sort(chosen.begin(), chosen.end());
  for (const auto& [tuple, mask] : chosen) {
    family.sets.push_back(Coalition{mask, g});
  }
  return family;
}

HalfFamily complementary_balanced_family(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("complementary_balanced_family: n must be even and >= 2");
  }
  const int m = n / 2;
  if (!central_binom_div4(m)) {
    throw std::invalid_argument(
        "complementary_balanced_family: C(n, n/2) is not divisible by 4 for n=" +
        std::to_string(n));
  }

  // Design over the first n-1 voters; voter n is the distinguished element.
  DesignFamily design = design_half_family(m - 1);
  std::vector<Mask> design_masks;
  design_masks.reserve(design.sets.size());
  for (const auto& s : design.sets) design_masks.push_back(s.bits);
  std::sort(design_masks.begin(), design_masks.end());

  HalfFamily family{n, {}};
  const Mask top_bit = voter_bit(n);
  for (Mask s : design_masks) {
    family.sets.push_back(Coalition{s | top_bit, n});
  }
  // Complements (within the first n-1 voters) of the unused (m-1)-subsets.
  const Mask ground = full_mask(n - 1);
  for_each_subset_of_size(n - 1, m, [&](Mask s) {
    Mask rest = ground ^ s;
    if (!std::binary_search(design_masks.begin(), design_masks.end(), rest)) {
      family.sets.push_back(Coalition{s, n});
    }
  });
  std::sort(family.sets.begin(), family.sets.end());

  // |T| = C(n, n/2)/2 and |T_i| = C(n, n/2)/4 exactly.
  BigInt middle = binomial(n, m);
  detail::internal_check(BigInt(family.sets.size()) * 2 == middle,
                         "complementary family has the wrong size");
  std::vector<BigInt> per_voter(n, 0);
  for (const auto& s : family.sets) {
    for (int id = 1; id <= n; ++id) {
      if (s.contains(id)) ++per_voter[id - 1];
    }
  }
  for (int id = 1; id <= n; ++id) {
    detail::internal_check(per_voter[id - 1] * 4 == middle,
                           "constructed family is not balanced");
  }
  return family;
}

VotingRule rule_from_half_family(const HalfFamily& family) {
  VotingRule rule = VotingRule::from_half_family(family.n, family.sets);
  ValidationReport report = detail::validate_half_structural(rule);
  if (!report.ok()) {
    std::string detail = "rule_from_half_family: family is not complementary";
    if (report.neutrality_witness) {
      detail += ": " + to_string(report.neutrality_witness->first) + " / " +
                to_string(report.neutrality_witness->second);
    }
    throw std::invalid_argument(detail);
  }
  return rule;
}

VotingRule unbiased_rule(int n) {
  if (n < 1) throw std::invalid_argument("unbiased_rule: n must be >= 1");
  if (n >= 2 && is_power_of_two(static_cast<std::uint64_t>(n))) {
    throw NonexistenceError("no unbiased voting rule exists for n=" +
                            std::to_string(n) + " (power of two)");
  }
  if (n % 2 == 1) return majority_rule(n);
  return rule_from_half_family(complementary_balanced_family(n));
}

VotingRule majority_rule(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("majority_rule: n must be odd");
  std::vector<Coalition> mwcs;
  mwcs.reserve(binomial_u64(n, (n + 1) / 2));
  for_each_subset_of_size(n, (n + 1) / 2, [&](Mask m) {
    mwcs.push_back(Coalition{m, n});
  });
  return VotingRule::from_mwcs(n, std::move(mwcs));
}

VotingRule representative_democracy(int groups, int group_size) {
  if (groups < 1 || groups % 2 == 0 || group_size < 1 || group_size % 2 == 0) {
    throw std::invalid_argument("representative_democracy: both parameters must be odd");
  }
  const int n = groups * group_size;
  if (n > BitTable::kMaxVoters) {
    throw std::invalid_argument("representative_democracy: more than 24 voters");
  }
  BitTable table(n);
  const Mask block = full_mask(group_size);
  const std::uint64_t universe = table.universe();
  for (Mask m = 0; m < universe; ++m) {
    int blocks_won = 0;
    for (int b = 0; b < groups; ++b) {
      Mask votes = (m >> (b * group_size)) & block;
      if (2 * std::popcount(votes) > group_size) ++blocks_won;
    }
    if (2 * blocks_won > groups) table.set(m);
  }
  return VotingRule::from_table(std::move(table));
}

VotingRule rule_from_intersecting_family(int n, const std::vector<Coalition>& family) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("rule_from_intersecting_family: n must be odd");
  }
  if (n > BitTable::kMaxVoters) {
    throw std::invalid_argument("rule_from_intersecting_family: more than 24 voters");
  }
  const int r = (n - 1) / 2;
  for (const auto& s : family) {
    if (s.n != n) {
      throw std::invalid_argument("rule_from_intersecting_family: voter count mismatch");
    }
    if (s.size() != r || s.bits == 0) {
      throw std::invalid_argument("rule_from_intersecting_family: " + to_string(s) +
                                  " does not have size " + std::to_string(r));
    }
  }
  std::vector<Mask> masks;
  for (const auto& s : family) masks.push_back(s.bits);
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end()) {
    throw std::invalid_argument("rule_from_intersecting_family: duplicate set");
  }
  IntersectionCheck meet = check_intersecting(family);
  if (!meet.intersecting) {
    throw std::invalid_argument("rule_from_intersecting_family: disjoint pair " +
                                to_string(meet.disjoint_pair->first) + " and " +
                                to_string(meet.disjoint_pair->second));
  }

  BitTable table(n);
  const std::uint64_t universe = table.universe();
  for (Mask m = 0; m < universe; ++m) {
    bool wins = false, loses = false;
    for (Mask w : masks) {
      if ((w & m) == w) wins = true;
      if ((w & m) == 0) loses = true;
    }
    detail::internal_check(!(wins && loses), "intersecting family yielded a clash");
    if (wins || (!loses && 2 * std::popcount(m) > n)) table.set(m);
  }
  return VotingRule::from_table(std::move(table));
}

namespace {

VotingRule build_example(ExampleRule which) {
  auto sets = [](int n, std::initializer_list<std::vector<int>> lists) {
    std::vector<Coalition> out;
    for (const auto& ids : lists) out.push_back(coalition_from_ids(ids, n));
    return out;
  };
  switch (which) {
    case ExampleRule::Fig3:
      return VotingRule::from_mwcs(
          4, sets(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}}));
    case ExampleRule::Maj3x3:
      return representative_democracy(3, 3);
    case ExampleRule::AppendixB:
      return rule_from_intersecting_family(
          9, sets(9, {{1, 2, 3, 4},
                      {4, 5, 6, 9},
                      {3, 7, 8, 9},
                      {1, 4, 5, 7},
                      {2, 5, 6, 8},
                      {3, 6, 7, 9},
                      {1, 2, 5, 9},
                      {2, 6, 7, 8},
                      {1, 3, 4, 8}}));
    case ExampleRule::Prism:
      // Edges a,b,c,x,y,z,u,v,w -> 1..9; each set is one edge neighborhood.
      return rule_from_intersecting_family(
          9, sets(9, {{2, 3, 4, 5},
                      {1, 3, 5, 6},
                      {1, 2, 4, 6},
                      {1, 3, 7, 9},
                      {1, 2, 7, 8},
                      {2, 3, 8, 9},
                      {4, 5, 8, 9},
                      {5, 6, 7, 9},
                      {4, 6, 7, 8}}));
  }
  throw std::invalid_argument("unknown example rule");
}

}  // namespace

VotingRule example_rule(ExampleRule which) {
  VotingRule rule = build_example(which);
  detail::internal_check(validate(rule).ok(), "example rule failed validation");
  return rule;
}

std::optional<ExampleRule> example_rule_from_name(std::string_view name) {
  if (name == "fig3") return ExampleRule::Fig3;
  if (name == "maj3x3") return ExampleRule::Maj3x3;
  if (name == "appendixB") return ExampleRule::AppendixB;
  if (name == "prism") return ExampleRule::Prism;
  return std::nullopt;
}

const char* example_rule_name(ExampleRule which) {
  switch (which) {
    case ExampleRule::Fig3: return "fig3";
    case ExampleRule::Maj3x3: return "maj3x3";
    case ExampleRule::AppendixB: return "appendixB";
    case ExampleRule::Prism: return "prism";
  }
  return "?";
}

}  // namespace fairvote
