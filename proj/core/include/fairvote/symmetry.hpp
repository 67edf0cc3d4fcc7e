#ifndef FAIRVOTE_SYMMETRY_HPP
#define FAIRVOTE_SYMMETRY_HPP

#include <optional>
#include <vector>

#include "fairvote/coalition.hpp"
#include "fairvote/rule.hpp"

namespace fairvote {

// Bijection on voters {1..n}; image[i-1] = sigma(i), 1-based.
struct Permutation {
  int n = 0;
  std::vector<int> image;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n == b.n && a.image == b.image;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image < b.image;
  }
};

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);

Mask apply_permutation(const Permutation& p, Mask m);
Coalition apply_permutation(const Permutation& p, const Coalition& c);

// True iff sigma maps the winning family onto itself. Checked on the MWC
// antichain: upward closure commutes with relabeling, so preserving the
// antichain and preserving the family are the same thing.
bool is_symmetry(const VotingRule& rule, const Permutation& sigma);

// Every symmetry of the rule, sorted lexicographically by image array.
// Backtracks over the MWC incidence structure; capped at n <= 10 since the
// group is returned as an explicit element list.
std::vector<Permutation> automorphism_group(const VotingRule& rule);

// Some symmetry with sigma(from) = to, if one exists. n <= 16.
std::optional<Permutation> find_symmetry_mapping(const VotingRule& rule,
                                                 int from, int to);

struct EquitabilityResult {
  bool equitable = false;
  // Voter orbits under the symmetry group, each sorted, ordered by least
  // member. Equitable iff there is a single orbit.
  std::vector<std::vector<int>> orbits;
};

// n <= 16 (backtracking search per voter pair, merged through a union-find).
EquitabilityResult is_equitable(const VotingRule& rule);

// Multiset (sorted ascending) of |S ∩ T| over distinct pairs S, T of family
// members containing the given voter. A symmetry mapping voter i to voter j
// must carry one profile to the other, which is the pruning invariant of the
// backtracking search.
std::vector<int> intersection_profile(const std::vector<Coalition>& family,
                                      int voter);

}  // namespace fairvote

#endif  // FAIRVOTE_SYMMETRY_HPP
