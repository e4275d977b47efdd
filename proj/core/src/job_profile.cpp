#include "compgap/job_profile.h"

#include <cmath>
#include <sstream>

#include "compgap/error.h"

namespace compgap {

namespace {

constexpr double kSumTolerance = 1e-9;

std::string fmt_amount(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_group(const std::map<CompetenceId, double>& amounts, std::span<const CompetenceId> members,
                 double f, const std::string& group_name) {
  double sum = 0.0;
  for (const auto& id : members) {
    auto it = amounts.find(id);
    if (it == amounts.end()) {
      throw Error(ErrorCode::WeightCoverageGap, "no allocation for " + id.str() + " in " + group_name);
    }
    if (!(it->second >= 0.0 && it->second <= f)) {
      throw Error(ErrorCode::AllocationOutOfRange, "allocation " + fmt_amount(it->second) + " for " + id.str() +
                                                       " outside [0, " + fmt_amount(f) + "]");
    }
    sum += it->second;
  }
  if (std::abs(sum - f) > kSumTolerance) {
    throw Error(ErrorCode::AllocationSumMismatch,
                group_name + " allocations sum to " + fmt_amount(sum) + ", expected " + fmt_amount(f));
  }
}

}  // namespace

void validate_allocation(const HcvAllocation& alloc, const CompetenceTree& tree) {
  if (!(alloc.f > 0.0) || !std::isfinite(alloc.f)) {
    throw Error(ErrorCode::AllocationOutOfRange, "allocation total f must be positive");
  }
  for (const auto& [id, amount] : alloc.level1) {
    if (!tree.contains(id) || id.level() != 1) {
      throw Error(ErrorCode::WeightCoverageGap, "level-1 allocation names " + id.str() + ", not a level-1 node");
    }
  }
  for (const auto& [id, amount] : alloc.level2) {
    if (!tree.contains(id) || id.level() != 2) {
      throw Error(ErrorCode::WeightCoverageGap, "level-2 allocation names " + id.str() + ", not a level-2 node");
    }
  }
  check_group(alloc.level1, tree.roots(), alloc.f, "level-1");
  for (const auto& root : tree.roots()) {
    check_group(alloc.level2, tree.children(root), alloc.f, "group " + root.str());
  }
}

std::vector<double> JobProfile::rcd3_in_tree_order(const CompetenceTree& tree) const {
  std::vector<double> out;
  out.reserve(tree.leaves().size());
  for (const auto& leaf : tree.leaves()) {
    auto it = rcd3.find(leaf);
    if (it == rcd3.end()) throw Error(ErrorCode::IncompleteRcd, "no required score for " + leaf.str());
    out.push_back(it->second);
  }
  return out;
}

JobProfile build_job_profile(const CompetenceTree& tree, std::string job_id,
                             const std::map<CompetenceId, RcdEntry>& rcd3, HcvAllocation hcv,
                             std::vector<EligibilityRule> eligibility) {
  JobProfile profile;
  profile.job_id = std::move(job_id);

  for (const auto& [id, entry] : rcd3) {
    if (!tree.contains(id)) throw Error(ErrorCode::UnknownId, "required score for unknown competence " + id.str());
    if (id.level() != CompetenceTree::kDepth) {
      throw Error(ErrorCode::LevelMismatch, "required scores are given for leaves only, got " + id.str());
    }
    double score = 0.0;
    if (const auto* term = std::get_if<std::string>(&entry)) {
      score = importance_to_score(*term);
    } else {
      score = std::get<double>(entry);
    }
    if (!(score >= 1.0 && score <= 5.0)) {
      throw Error(ErrorCode::ScoreOutOfRange, "required score " + fmt_amount(score) + " for " + id.str() +
                                                  " outside [1, 5]");
    }
    profile.rcd3.emplace(id, score);
  }
  for (const auto& leaf : tree.leaves()) {
    if (!profile.rcd3.count(leaf)) throw Error(ErrorCode::IncompleteRcd, "no required score for " + leaf.str());
  }

  validate_allocation(hcv, tree);
  profile.hcv = std::move(hcv);

  for (const auto& rule : eligibility) {
    if (!tree.contains(rule.competence)) {
      throw Error(ErrorCode::UnknownCompetenceInRule, "eligibility rule names unknown competence " +
                                                          rule.competence.str());
    }
    if (!(rule.min_score >= 1.0 && rule.min_score <= 5.0)) {
      throw Error(ErrorCode::ScoreOutOfRange, "eligibility minimum " + fmt_amount(rule.min_score) +
                                                  " outside [1, 5]");
    }
  }
  profile.eligibility = std::move(eligibility);
  return profile;
}

}  // namespace compgap
