// Command-line front end: construct rules, check rule files, print indices,
// dump the named example rules, and run the small-n enumerations.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fairvote/construct.hpp"
#include "fairvote/enumerate.hpp"
#include "fairvote/errors.hpp"
#include "fairvote/indices.hpp"
#include "fairvote/report.hpp"
#include "fairvote/rule_io.hpp"
#include "fairvote/symmetry.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitInvalidRule = 1;
constexpr int kExitNonexistence = 2;
constexpr int kExitIoError = 3;

int cmd_construct(int n, const std::string& out_path) {
  try {
    fairvote::VotingRule rule = fairvote::unbiased_rule(n);
    fairvote::write_rule_file(rule, out_path);
  } catch (const fairvote::NonexistenceError&) {
    std::cerr << "no fair rule exists for n=" << n << " (power of two)\n";
    return kExitNonexistence;
  }
  return 0;
}

int cmd_check(const std::string& path, bool equitable) {
  fairvote::VotingRule rule = fairvote::load_rule_file(path);
  fairvote::RuleReport report = fairvote::analyze_rule(rule, equitable);
  std::cout << fairvote::report_to_json(report);
  return report.valid ? 0 : kExitInvalidRule;
}

int cmd_indices(const std::string& path, const std::string& format) {
  fairvote::VotingRule rule = fairvote::load_rule_file(path);
  fairvote::ValidationReport validation = fairvote::validate(rule);
  if (!validation.ok()) {
    std::cerr << "invalid rule: "
              << (validation.monotone ? "not neutral/resolute" : "not monotone")
              << "\n";
    return kExitInvalidRule;
  }
  auto shapley = fairvote::shapley_shubik(rule, fairvote::IndexMethod::WinningCounts);
  auto banzhaf = fairvote::banzhaf(rule, fairvote::IndexMethod::WinningCounts);
  if (format == "json") {
    json out;
    out["n"] = rule.voters();
    out["shapley"] = shapley.to_strings();
    out["banzhaf"] = banzhaf.to_strings();
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto ss = shapley.to_strings();
  auto bz = banzhaf.to_strings();
  std::size_t ss_width = 7, bz_width = 7;
  for (const auto& v : ss) ss_width = std::max(ss_width, v.size());
  for (const auto& v : bz) bz_width = std::max(bz_width, v.size());
  std::printf("%5s  %*s  %*s\n", "voter", static_cast<int>(ss_width), "shapley",
              static_cast<int>(bz_width), "banzhaf");
  for (int i = 0; i < rule.voters(); ++i) {
    std::printf("%5d  %*s  %*s\n", i + 1, static_cast<int>(ss_width), ss[i].c_str(),
                static_cast<int>(bz_width), bz[i].c_str());
  }
  return 0;
}

int cmd_example(const std::string& name, const std::string& out_path) {
  auto which = fairvote::example_rule_from_name(name);
  if (!which) {
    std::cerr << "unknown example rule '" << name
              << "' (expected fig3, maj3x3, appendixB or prism)\n";
    return kExitIoError;
  }
  fairvote::write_rule_file(fairvote::example_rule(*which), out_path);
  return 0;
}

int cmd_enumerate(int n, const std::string& predicate, const std::string& dump_dir,
                  bool best_effort) {
  if (n < 2 || n > 7) {
    std::cerr << "enumerate supports 2 <= n <= 7\n";
    return kExitIoError;
  }
  if (n == 7 && !best_effort) {
    std::cerr << "n=7 visits ~1.4M rules; pass --best-effort to confirm\n";
    return kExitIoError;
  }

  std::optional<fairvote::Fairness> wanted;
  if (!predicate.empty()) {
    if (predicate == "ss") wanted = fairvote::Fairness::SS;
    else if (predicate == "banzhaf") wanted = fairvote::Fairness::Banzhaf;
    else if (predicate == "unbiased") wanted = fairvote::Fairness::Unbiased;
    else if (predicate == "equitable") wanted = fairvote::Fairness::Equitable;
    else {
      std::cerr << "unknown predicate '" << predicate << "'\n";
      return kExitIoError;
    }
  }

  // The symmetry search is the one expensive predicate; price it in only
  // when cheap or explicitly requested.
  bool with_equitable =
      n <= 6 || (wanted && *wanted == fairvote::Fairness::Equitable);

  std::vector<fairvote::VotingRule> to_dump;
  fairvote::EnumerationReport report;
  report.n = n;
  if (with_equitable) report.equitable = 0;
  fairvote::enumerate_rules(n, [&](const fairvote::VotingRule& rule) {
    report.total_rules++;
    bool ss = fairvote::is_ss_fair(rule);
    bool bz = fairvote::is_banzhaf_fair(rule);
    bool unb = fairvote::is_unbiased(rule).unbiased;
    bool eq = false;
    if (with_equitable) {
      eq = fairvote::is_equitable(rule).equitable;
      if (eq) (*report.equitable)++;
    }
    if (ss) report.ss_fair++;
    if (bz) report.banzhaf_fair++;
    if (unb) report.unbiased++;
    if (!dump_dir.empty()) {
      bool satisfies = true;
      if (wanted) {
        switch (*wanted) {
          case fairvote::Fairness::SS: satisfies = ss; break;
          case fairvote::Fairness::Banzhaf: satisfies = bz; break;
          case fairvote::Fairness::Unbiased: satisfies = unb; break;
          case fairvote::Fairness::Equitable: satisfies = eq; break;
        }
      }
      if (satisfies) to_dump.push_back(rule);
    }
  });

  json out;
  out["n"] = report.n;
  out["total_rules"] = report.total_rules;
  out["ss_fair"] = report.ss_fair;
  out["banzhaf_fair"] = report.banzhaf_fair;
  out["unbiased"] = report.unbiased;
  out["equitable"] = report.equitable ? json(*report.equitable) : json(nullptr);
  if (!predicate.empty()) {
    std::uint64_t count = 0;
    switch (*wanted) {
      case fairvote::Fairness::SS: count = report.ss_fair; break;
      case fairvote::Fairness::Banzhaf: count = report.banzhaf_fair; break;
      case fairvote::Fairness::Unbiased: count = report.unbiased; break;
      case fairvote::Fairness::Equitable: count = report.equitable.value_or(0); break;
    }
    out["predicate"] = predicate;
    out["predicate_count"] = count;
  }

  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    // Canonical dump order: by membership table.
    std::sort(to_dump.begin(), to_dump.end(),
              [](const fairvote::VotingRule& a, const fairvote::VotingRule& b) {
                return a.table().words() < b.table().words();
              });
    int index = 0;
    for (const auto& rule : to_dump) {
      char name[32];
      std::snprintf(name, sizeof(name), "rule_%06d.vr", index++);
      // .vr dumps use the mwc form.
      fairvote::write_rule_file(
          fairvote::VotingRule::from_mwcs(n, fairvote::minimal_winning_coalitions(rule)),
          (std::filesystem::path(dump_dir) / name).string());
    }
    out["dumped"] = index;
  }

  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact influence indices and fair resolute voting rules"};
  app.require_subcommand(1);

  int construct_n = 0;
  std::string construct_out;
  auto* construct = app.add_subcommand(
      "construct", "Write an unbiased rule for the given electorate size");
  construct->add_option("--n", construct_n, "number of voters")->required();
  construct->add_option("--out", construct_out, "output .vr path")->required();

  std::string check_path;
  bool check_equitable = false;
  auto* check = app.add_subcommand("check", "Validate a rule file and report fairness");
  check->add_option("path", check_path, "rule file")->required();
  check->add_flag("--equitable", check_equitable,
                  "also run the symmetry (equitability) search");

  std::string indices_path, indices_format = "json";
  auto* indices = app.add_subcommand("indices", "Print the influence indices");
  indices->add_option("path", indices_path, "rule file")->required();
  indices->add_option("--format", indices_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string example_name, example_out;
  auto* example = app.add_subcommand("example", "Write one of the named example rules");
  example->add_option("--name", example_name, "fig3, maj3x3, appendixB or prism")
      ->required();
  example->add_option("--out", example_out, "output .vr path")->required();

  int enum_n = 0;
  std::string enum_predicate, enum_dump;
  bool enum_best_effort = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Enumerate all monotone neutral resolute rules for small n");
  enumerate->add_option("--n", enum_n, "number of voters (2..7)")->required();
  enumerate->add_option("--predicate", enum_predicate,
                        "ss, banzhaf, unbiased or equitable");
  enumerate->add_option("--dump", enum_dump, "directory for satisfying rules");
  enumerate->add_flag("--best-effort", enum_best_effort,
                      "allow the expensive n=7 run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // Folds CLI11's usage-error codes into the documented set; --help and
    // --version still exit 0.
    int code = app.exit(err);
    return code == 0 ? 0 : kExitIoError;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_n, construct_out);
    if (check->parsed()) return cmd_check(check_path, check_equitable);
    if (indices->parsed()) return cmd_indices(indices_path, indices_format);
    if (example->parsed()) return cmd_example(example_name, example_out);
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_n, enum_predicate, enum_dump, enum_best_effort);
    }
  } catch (const fairvote::NonexistenceError& err) {
    std::cerr << "no fair rule exists: " << err.what() << "\n";
    return kExitNonexistence;
  } catch (const fairvote::ParseError& err) {
    std::cerr << "parse error at line " << err.line() << ": " << err.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitIoError;
  }
  return kExitIoError;
}
