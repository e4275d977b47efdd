#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "compgap/competence_tree.h"

namespace compgap {

// Minimum score a candidate must reach on one competence (any level) to be
// ranked at all. Non-leaf rules are checked against rolled-up scores.
struct EligibilityRule {
  CompetenceId competence;
  double min_score = 1.0;
  std::string description;
};

// Hierarchical cumulative-voting amounts: `level1` distributes f over the
// roots, `level2` distributes f within each root's children.
struct HcvAllocation {
  double f = 100.0;
  std::map<CompetenceId, double> level1;
  std::map<CompetenceId, double> level2;
};

// Checks both sum constraints and the [0, f] bounds against `tree`.
// Errors: WeightCoverageGap, AllocationOutOfRange, AllocationSumMismatch.
void validate_allocation(const HcvAllocation& alloc, const CompetenceTree& tree);

struct JobProfile {
  std::string job_id;
  // Required score per leaf, keyed in id order.
  std::map<CompetenceId, double> rcd3;
  HcvAllocation hcv;
  std::vector<EligibilityRule> eligibility;

  // Required scores laid out in the tree's leaf order.
  std::vector<double> rcd3_in_tree_order(const CompetenceTree& tree) const;
};

// A required score is either numeric or one of the five importance terms.
using RcdEntry = std::variant<double, std::string>;

// Errors: IncompleteRcd, ScoreOutOfRange, UnknownTerm, UnknownId,
// UnknownCompetenceInRule, plus everything validate_allocation raises.
JobProfile build_job_profile(const CompetenceTree& tree, std::string job_id,
                             const std::map<CompetenceId, RcdEntry>& rcd3, HcvAllocation hcv,
                             std::vector<EligibilityRule> eligibility);

}  // namespace compgap
