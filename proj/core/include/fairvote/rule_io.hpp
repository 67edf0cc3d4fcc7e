#ifndef FAIRVOTE_RULE_IO_HPP
#define FAIRVOTE_RULE_IO_HPP

#include <iosfwd>
#include <string>

#include "fairvote/errors.hpp"
#include "fairvote/rule.hpp"

namespace fairvote {

// ".vr" rule files: UTF-8, LF line endings.
//
//   # comment lines start with '#'
//   n <int>
//   kind <mwc|half>
//   set <id> <id> ...      one coalition per line, 1-based, strictly increasing
//
// kind mwc lists minimal winning coalitions (an antichain; the winning
// family is the upward closure). kind half lists the middle layer of an
// even-n rule: winning iff |S| > n/2 or S listed. Contract violations
// (ids out of range, wrong sizes, nested mwc sets, duplicates) raise
// ParseError with the offending line number; axiom violations are left to
// validate().
VotingRule parse_rule(std::istream& in);
VotingRule load_rule_file(const std::string& path);

// Canonical text form: header then sets sorted by mask. Table-backed rules
// serialize their MWC antichain; half-family rules keep kind half. Parsing a
// serialized rule and serializing again is byte-identical.
std::string serialize_rule(const VotingRule& rule);
void write_rule_file(const VotingRule& rule, const std::string& path);

}  // namespace fairvote

#endif  // FAIRVOTE_RULE_IO_HPP
