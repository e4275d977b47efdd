#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compgap/anova.h"
#include "compgap/assessment.h"
#include "compgap/competence_tree.h"
#include "compgap/descriptive.h"
#include "compgap/gap.h"
#include "compgap/job_profile.h"
#include "compgap/prioritization.h"
#include "compgap/ranking.h"
#include "compgap/scott_knott.h"

namespace compgap {

struct PipelineConfig {
  double alpha = 0.05;
  // Kind written to gaps.csv; qualification points, ANOVA and clustering always use simple gaps.
  GapKind gap_kind = GapKind::Simple;
  Policy policy = Policy::MostQualified;
  int display_decimals = 2;
  // Only used when the level-3 scores are built from raw responses.
  AssessmentTypeWeights assessment_type_weights;
  // Equal weights per group when absent.
  std::optional<RollupWeights> leaf_to_level2;
  std::optional<RollupWeights> level2_to_level1;

  // Errors: InvalidConfig.
  void validate() const;
};

struct StatsRow {
  std::string label;  // "Total" or a level-1 id
  std::string name;
  DescriptiveStats stats;
};

// Table of descriptive statistics for the mean of all leaves and each level-1 node.
std::vector<StatsRow> descriptive_table(const AcdMatrix& acd3, const CompetenceTree& tree,
                                        const RollupWeights& leaf_to_level2, const RollupWeights& level2_to_level1);

struct RunResult {
  PipelineConfig config;
  std::string job_id;

  AcdMatrix acd3;  // every candidate
  EligibilityReport eligibility;

  // Everything below covers eligible candidates only.
  AcdMatrix acd2;
  AcdMatrix acd1;
  std::vector<double> total;
  ScoreMatrix rcd2;  // single "Req" row
  std::vector<StatsRow> stats;

  WeightScheme weights;
  ScoreMatrix weighted_acd;
  ScoreMatrix weighted_rcd;
  GapMatrix gaps;           // simple gaps
  GapMatrix exported_gaps;  // config.gap_kind
  std::vector<QualificationPoint> points;
  std::optional<AnovaTable> anova;  // absent with a single eligible candidate
  ClusterPartition partition;
  std::vector<RankingRow> ranking;         // descending MSG
  std::vector<RankingRow> recommendation;  // ordered by config.policy
};

// Runs rollups, weighting, gaps, ANOVA, Scott-Knott and the ranking policy.
// Library errors are re-thrown with "stage <name>" as their location.
RunResult run_pipeline(const CompetenceTree& tree, const AcdMatrix& acd3, const JobProfile& job,
                       const PipelineConfig& config);

// File name -> content for every artifact of a run, in a fixed order.
std::vector<std::pair<std::string, std::string>> render_outputs(const RunResult& result, const CompetenceTree& tree);

std::string render_ranking_csv(const RunResult& result);
std::string render_stats_csv(std::span<const StatsRow> rows, int decimals);
std::string render_weights_csv(const WeightScheme& weights);
std::string render_result_json(const RunResult& result, const CompetenceTree& tree);

// Writes every artifact into `dir` (created if needed). On failure, files
// written by this call are removed. Errors: IoError.
void write_outputs(const RunResult& result, const CompetenceTree& tree, const std::filesystem::path& dir);

}  // namespace compgap
