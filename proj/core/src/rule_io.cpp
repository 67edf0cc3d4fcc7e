#include "fairvote/rule_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace fairvote {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line_no, const char* what) {
  try {
    std::size_t consumed = 0;
    int value = std::stoi(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected an integer ") + what +
                                  ", got '" + token + "'");
  }
}

}  // namespace

VotingRule parse_rule(std::istream& in) {
  int n = -1;
  bool have_kind = false;
  bool kind_half = false;
  std::vector<Coalition> sets;
  std::unordered_set<Mask> seen_masks;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    auto tokens = tokenize(line);
    const std::string& directive = tokens.front();

    if (directive == "n") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'n' line");
      if (tokens.size() != 2) throw ParseError(line_no, "'n' takes one integer");
      n = parse_int(tokens[1], line_no, "after 'n'");
      if (n < 1 || n > 64) throw ParseError(line_no, "n must be in 1..64");
      continue;
    }
    if (directive == "kind") {
      if (n < 0) throw ParseError(line_no, "'kind' must come after 'n'");
      if (have_kind) throw ParseError(line_no, "duplicate 'kind' line");
      if (tokens.size() != 2 || (tokens[1] != "mwc" && tokens[1] != "half")) {
        throw ParseError(line_no, "kind must be 'mwc' or 'half'");
      }
      kind_half = tokens[1] == "half";
      if (kind_half && n % 2 != 0) {
        throw ParseError(line_no, "kind half requires an even voter count");
      }
      have_kind = true;
      continue;
    }
    if (directive == "set") {
      if (!have_kind) throw ParseError(line_no, "'set' must come after 'kind'");
      Coalition c{0, n};
      int previous = 0;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        int id = parse_int(tokens[t], line_no, "voter id");
        if (id < 1 || id > n) {
          throw ParseError(line_no, "voter id " + std::to_string(id) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (id <= previous) {
          throw ParseError(line_no, "voter ids must be strictly increasing");
        }
        previous = id;
        c.bits |= voter_bit(id);
      }
      if (kind_half && c.size() != n / 2) {
        throw ParseError(line_no, "kind half set must have size " +
                                      std::to_string(n / 2));
      }
      if (!seen_masks.insert(c.bits).second) {
        throw ParseError(line_no, "duplicate set " + to_string(c));
      }
      sets.push_back(c);
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + directive + "'");
  }

  if (n < 0) throw ParseError(line_no, "missing 'n' line");
  if (!have_kind) throw ParseError(line_no, "missing 'kind' line");

  try {
    if (kind_half) return VotingRule::from_half_family(n, std::move(sets));
    return VotingRule::from_mwcs(n, std::move(sets));
  } catch (const std::invalid_argument& bad) {
    // Contract violations detected at rule construction (nested mwc sets).
    throw ParseError(line_no, bad.what());
  }
}

VotingRule load_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file: " + path);
  return parse_rule(in);
}

std::string serialize_rule(const VotingRule& rule) {
  const bool half = rule.repr() == VotingRule::Repr::HalfFamily;
  std::vector<Coalition> sets;
  if (half) {
    sets = rule.half_family();
  } else if (rule.repr() == VotingRule::Repr::MwcList) {
    sets = rule.mwc_list();
  } else {
    sets = minimal_winning_coalitions(rule);
  }
  std::string out = "n " + std::to_string(rule.voters()) + "\n";
  out += half ? "kind half\n" : "kind mwc\n";
  for (const auto& s : sets) {
    out += "set";
    for (int id : coalition_ids(s)) {
      out += " " + std::to_string(id);
    }
    out += "\n";
  }
  return out;
}

void write_rule_file(const VotingRule& rule, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << serialize_rule(rule);
  if (!out) throw std::runtime_error("failed writing rule file: " + path);
}

}  // namespace fairvote
