#ifndef FAIRVOTE_CONSTRUCT_HPP
#define FAIRVOTE_CONSTRUCT_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "fairvote/coalition.hpp"
#include "fairvote/rule.hpp"

namespace fairvote {

// Half of the k-subsets of {1..2k+1}, closed under cyclic shift, so that
// every element lies in the same number of sets.
struct DesignFamily {
  int k = 0;
  std::vector<Coalition> sets;  // subsets of {1..2k+1}, n = 2k+1
};

// Family of n/2-sized subsets holding exactly one of every complement pair.
struct HalfFamily {
  int n = 0;
  std::vector<Coalition> sets;  // sorted by mask
};

// Partitions the k-subsets of Z/(2k+1)Z into cyclic-shift orbits (each of
// size 2k+1), sorts the orbits by their lexicographically smallest member
// (as a sorted id tuple) and keeps the first half. Requires C(2k+1, k) even;
// throws std::invalid_argument otherwise.
DesignFamily design_half_family(int k);

// The distinguished-voter construction: sets of design_half_family(n/2 - 1)
// extended by voter n, together with the within-{1..n-1} complements of the
// unused (n/2-1)-subsets. Complementary, and every voter lies in exactly
// C(n, n/2)/4 sets. Requires 4 | C(n, n/2); throws std::invalid_argument
// otherwise.
HalfFamily complementary_balanced_family(int n);

// Winning iff the coalition is bigger than n/2, or has size exactly n/2 and
// is listed. Throws std::invalid_argument when the family is not
// complementary.
VotingRule rule_from_half_family(const HalfFamily& family);

// Majority for odd n, the half-family construction for even n that is not a
// power of two. Throws NonexistenceError for n in {2, 4, 8, 16, ...}.
VotingRule unbiased_rule(int n);

// Odd n only; minimal winning coalitions are all (n+1)/2-subsets.
VotingRule majority_rule(int n);

// groups x group_size voters in consecutive blocks; the winner is the
// majority of the per-block majorities. Both parameters odd, product <= 24.
VotingRule representative_democracy(int groups, int group_size);

// For odd n = 2r+1 and a pairwise-intersecting family W of r-sized sets:
// f(S) = 1 if some W-set is inside S, 0 if some W-set is inside N\S, and
// majority otherwise. Pairwise intersection makes this well defined; a
// disjoint pair raises std::invalid_argument naming it.
VotingRule rule_from_intersecting_family(int n, const std::vector<Coalition>& family);

// Hard-coded rules used throughout the test corpus. Letter labels map to
// ids in listed order: fig3 a..d -> 1..4; prism edges a,b,c,x,y,z,u,v,w ->
// 1..9.
enum class ExampleRule { Fig3, Maj3x3, AppendixB, Prism };

VotingRule example_rule(ExampleRule which);
std::optional<ExampleRule> example_rule_from_name(std::string_view name);
const char* example_rule_name(ExampleRule which);

}  // namespace fairvote

#endif  // FAIRVOTE_CONSTRUCT_HPP
