#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compgap/assessment.h"
#include "compgap/gap.h"
#include "compgap/job_profile.h"
#include "compgap/scott_knott.h"

namespace compgap {

struct Exclusion {
  std::string candidate;
  EligibilityRule rule;
  double score = 0.0;
};

struct EligibilityReport {
  // Eligible candidates in input order.
  std::vector<std::string> eligible;
  // One entry per violated rule.
  std::vector<Exclusion> exclusions;
};

// A candidate is kept iff every rule holds (score >= min_score). Non-leaf
// rules are evaluated on scores rolled up with the given weights.
// Errors: UnknownCompetenceInRule.
EligibilityReport filter_eligible(const AcdMatrix& acd3, const CompetenceTree& tree,
                                  std::span<const EligibilityRule> rules, const RollupWeights& leaf_to_level2,
                                  const RollupWeights& level2_to_level1);

enum class Qualification { Over, Under };

std::string_view to_string(Qualification q);

struct RankingRow {
  std::size_t rank = 0;
  std::string candidate;
  double msg = 0.0;
  // MSG minus / plus the sample standard deviation of the candidate's simple gaps.
  double lower = 0.0;
  double upper = 0.0;
  std::size_t cluster = 0;
  Qualification qualification = Qualification::Over;
};

// Rows ordered by descending MSG (candidate id breaks ties), ranks 1..n.
// Errors: CandidateMismatch when partition, points and gaps disagree on the candidate set.
std::vector<RankingRow> rank_and_label(const ClusterPartition& partition, std::span<const QualificationPoint> points,
                                       const GapMatrix& gaps);

enum class Policy { MostQualified, ClosestFit };

std::string_view to_string(Policy policy);
// Errors: InvalidConfig.
Policy parse_policy(std::string_view text);

// Reorders whole clusters: most_qualified keeps the best-MSG cluster first,
// closest_fit puts the cluster with the smallest mean |MSG| first. Rows keep
// their within-cluster order and are renumbered 1..n.
std::vector<RankingRow> apply_policy(std::span<const RankingRow> rows, Policy policy);

}  // namespace compgap
