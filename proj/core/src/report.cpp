#include "fairvote/report.hpp"

#include <json.hpp>

#include "fairvote/errors.hpp"
#include "fairvote/symmetry.hpp"

namespace fairvote {

RuleReport analyze_rule(const VotingRule& rule, bool with_equitable) {
  RuleReport report;
  report.n = rule.voters();
  report.validation = validate(rule);
  report.valid = report.validation.ok();
  if (!report.valid) return report;

  // Run both routes of both indices; any disagreement is a counting bug.
  IndexVector ss_pivotal = shapley_shubik(rule, IndexMethod::Pivotal);
  IndexVector ss_wcount = shapley_shubik(rule, IndexMethod::WinningCounts);
  detail::internal_check(ss_pivotal.values == ss_wcount.values,
                         "Shapley-Shubik routes disagree");
  IndexVector bz_pivotal = banzhaf(rule, IndexMethod::Pivotal);
  IndexVector bz_wcount = banzhaf(rule, IndexMethod::WinningCounts);
  detail::internal_check(bz_pivotal.values == bz_wcount.values,
                         "Banzhaf routes disagree");

  report.shapley = std::move(ss_wcount);
  report.banzhaf = std::move(bz_wcount);
  report.ss_fair = report.shapley->all_equal();
  report.banzhaf_fair = report.banzhaf->all_equal();
  UnbiasedResult unbiased = is_unbiased(rule);
  report.unbiased = unbiased.unbiased;
  report.unbiased_witness = unbiased.witness;

  if (with_equitable) {
    EquitabilityResult eq = is_equitable(rule);
    report.equitable = eq.equitable;
    report.voter_orbits = std::move(eq.orbits);
  }
  return report;
}

std::string report_to_json(const RuleReport& report) {
  using json = nlohmann::ordered_json;
  json out;
  out["n"] = report.n;
  out["valid"] = report.valid;
  out["shapley"] = report.shapley ? json(report.shapley->to_strings()) : json(nullptr);
  out["banzhaf"] = report.banzhaf ? json(report.banzhaf->to_strings()) : json(nullptr);
  out["ss_fair"] = report.ss_fair ? json(*report.ss_fair) : json(nullptr);
  out["banzhaf_fair"] =
      report.banzhaf_fair ? json(*report.banzhaf_fair) : json(nullptr);
  out["unbiased"] = report.unbiased ? json(*report.unbiased) : json(nullptr);
  out["equitable"] = report.equitable ? json(*report.equitable) : json(nullptr);

  json witness;
  if (!report.validation.monotone && report.validation.monotone_witness) {
    witness["monotone"] = {
        {"winning_subset", coalition_ids(report.validation.monotone_witness->first)},
        {"losing_superset", coalition_ids(report.validation.monotone_witness->second)},
    };
  }
  if (!report.validation.neutral_resolute && report.validation.neutrality_witness) {
    witness["neutral_resolute"] = {
        {"set", coalition_ids(report.validation.neutrality_witness->first)},
        {"complement", coalition_ids(report.validation.neutrality_witness->second)},
    };
  }
  if (report.unbiased_witness) {
    witness["unbiased"] = {{"i", report.unbiased_witness->i},
                           {"j", report.unbiased_witness->j},
                           {"k", report.unbiased_witness->k}};
  }
  if (report.voter_orbits) {
    witness["equitable_orbits"] = *report.voter_orbits;
  }
  out["witness"] = witness.empty() ? json(nullptr) : witness;
  return out.dump(2) + "\n";
}

}  // namespace fairvote
