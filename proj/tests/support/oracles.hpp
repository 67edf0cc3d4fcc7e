#ifndef FAIRVOTE_TESTS_ORACLES_HPP
#define FAIRVOTE_TESTS_ORACLES_HPP

// Brute-force oracles kept deliberately independent of the library's
// computation paths: permutation sweeps, subset sweeps, big-integer Pascal
// rows and a 2^(2^n) filter over all boolean functions. Slow on purpose.

#include <cstdint>
#include <vector>

#include "fairvote/indices.hpp"
#include "fairvote/numbers.hpp"
#include "fairvote/rule.hpp"

namespace fairvote::oracles {

// Shapley-Shubik straight from the definition: one pass per ordering of the
// voters, counting who turns the accumulating coalition winning. n <= 8.
IndexVector shapley_by_orderings(const VotingRule& rule);

// Banzhaf straight from the definition: subsets of the other voters.
IndexVector banzhaf_by_subsets(const VotingRule& rule);

// Per-size winning/pivot counts recomputed with size-layer subset
// enumeration and plain evaluate calls.
CountMatrix w_counts_by_layers(const VotingRule& rule);
CountMatrix a_counts_by_definition(const VotingRule& rule);
CountMatrix b_counts_by_definition(const VotingRule& rule);

// All monotone+neutral rules on n voters found by filtering every boolean
// function; n <= 4. Returns the winning-family tables as single words
// (bit m = f(m)), sorted.
std::vector<std::uint64_t> all_valid_tables_brute(int n);

// Same set by a different route that reaches n <= 6: depth-first over all
// monotone functions (Dedekind-style), then a neutrality filter.
std::vector<std::uint64_t> all_valid_tables_monotone_first(int n);

// Single-word table of a rule (n <= 6), for comparisons with the above.
std::uint64_t table_word(const VotingRule& rule);

// The Fig. 3 electorate evaluated from its verbal description rather than
// from minimal winning coalitions.
VotingRule fig3_semantic();

// The 9-voter tie-break rule built layer by layer (sizes <= 3 lose, size 4
// wins exactly on the family, larger sizes by neutrality), rather than by
// subset tests against the family.
VotingRule tiebreak_rule_by_layers(const std::vector<Coalition>& family);

// Parities of C(m, r) for all 0 <= r <= m <= max_m, from big-integer Pascal
// rows; result[m][r].
std::vector<std::vector<int>> pascal_parities(int max_m);

// C(2m, m) mod 4 for m = 1..max_m, from the exact big-integer recurrence
// C(2m, m) = C(2m-2, m-1) * 2(2m-1)/m.
std::vector<int> central_binom_mod4(int max_m);

}  // namespace fairvote::oracles

#endif  // FAIRVOTE_TESTS_ORACLES_HPP
