#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compgap/competence_tree.h"
#include "compgap/score_matrix.h"

namespace compgap {

enum class AssessorRole { Self, Colleague, Manager };
enum class AssessmentType { MultiSource, SelfAssessment };

std::string_view to_string(AssessorRole role);
std::string_view to_string(AssessmentType type);
// Errors: ParseError.
AssessorRole parse_assessor_role(std::string_view text);
AssessmentType parse_assessment_type(std::string_view text);

// One Likert answer to one weighted statement about a leaf competence.
struct StatementResponse {
  std::string assessee;
  CompetenceId competence;
  std::string statement_id;
  int value = 0;
  double weight = 0.0;
  AssessorRole assessor_role = AssessorRole::Self;
  AssessmentType assessment_type = AssessmentType::SelfAssessment;
};

// Weighted mean of the answers for one (assessee, competence, type) key.
// Errors: EmptyResponseSet, MixedKeys, ScoreOutOfRange, WeightSumViolation.
double score_statement_set(std::span<const StatementResponse> responses);

// Non-negative weights per assessment type, normalized to sum 1 on construction.
class AssessmentTypeWeights {
 public:
  AssessmentTypeWeights() = default;
  // Errors: WeightSumViolation when any weight is negative or all are zero.
  explicit AssessmentTypeWeights(const std::map<AssessmentType, double>& raw);
  // Equal weight over `present`.
  static AssessmentTypeWeights equal(std::span<const AssessmentType> present);

  const std::map<AssessmentType, double>& weights() const noexcept { return weights_; }
  bool empty() const noexcept { return weights_.empty(); }

 private:
  std::map<AssessmentType, double> weights_;
};

// Weighted combination of per-type level-3 values.
// Errors: MissingTypeValue, WeightSumViolation.
double combine_assessment_types(const std::map<AssessmentType, double>& values,
                                const AssessmentTypeWeights& weights);

// Builds the level-3 ACD matrix from raw responses. With `type_weights`
// empty, each (assessee, competence) averages the types it actually has.
// Candidates appear in first-seen order. Errors: IncompleteMatrix for any
// missing (candidate, leaf) pair, plus the per-key errors above.
AcdMatrix acd3_from_responses(std::span<const StatementResponse> responses, const CompetenceTree& tree,
                              const AssessmentTypeWeights& type_weights = {});

// Per-parent weights over children, used to roll one level up.
class RollupWeights {
 public:
  RollupWeights() = default;
  // Errors: WeightCoverageGap when a parent's children are not covered
  // exactly, WeightSumViolation when a group is out of [0,1] or does not sum to 1.
  RollupWeights(std::map<CompetenceId, std::vector<double>> by_parent, const CompetenceTree& tree,
                int parent_level);
  // 1/n for each of a parent's n children.
  static RollupWeights equal(const CompetenceTree& tree, int parent_level);

  int parent_level() const noexcept { return parent_level_; }
  // Weights in the tree's child order.
  std::span<const double> for_parent(const CompetenceId& parent) const;

 private:
  int parent_level_ = 0;
  std::map<CompetenceId, std::vector<double>> by_parent_;
};

// Rolls a level-k matrix up to level k-1. Errors: LevelMismatch, WeightCoverageGap.
AcdMatrix rollup(const AcdMatrix& child, const RollupWeights& weights, const CompetenceTree& tree);

struct Level1Scores {
  AcdMatrix level2;
  AcdMatrix level1;
  // Mean of every leaf score, per candidate.
  std::vector<double> total;
};

Level1Scores level1_scores(const AcdMatrix& acd3, const CompetenceTree& tree, const RollupWeights& leaf_to_level2,
                           const RollupWeights& level2_to_level1);

// Score of every candidate at an arbitrary node, rolled up from the leaves
// with the given weights. Leaves return the raw column.
std::vector<double> node_scores(const AcdMatrix& acd3, const CompetenceId& node, const CompetenceTree& tree,
                                const RollupWeights& leaf_to_level2, const RollupWeights& level2_to_level1);

}  // namespace compgap
