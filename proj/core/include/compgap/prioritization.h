#pragma once

#include <span>
#include <utility>
#include <vector>

#include "compgap/competence_tree.h"
#include "compgap/job_profile.h"
#include "compgap/score_matrix.h"

namespace compgap {

// Absolute level-2 weights summing to 1, in the tree's level-2 order.
class WeightScheme {
 public:
  WeightScheme() = default;
  explicit WeightScheme(std::vector<std::pair<CompetenceId, double>> weights);

  const std::vector<std::pair<CompetenceId, double>>& entries() const noexcept { return weights_; }
  // Errors: WeightCoverageGap.
  double weight(const CompetenceId& id) const;
  double total() const;

 private:
  std::vector<std::pair<CompetenceId, double>> weights_;
};

// weight(j under i) = (w_i / f) * (y_ij / f), then divided by the total.
// Errors: AllocationSumMismatch and the rest of validate_allocation.
WeightScheme absolute_weights(const HcvAllocation& alloc, const CompetenceTree& tree);

// Multiplies each column by its weight. Works for ACD rows and the RCD row alike.
// Errors: WeightCoverageGap.
ScoreMatrix apply_weights(const ScoreMatrix& level2, const WeightScheme& scheme);

// Ratio of two allocations at the same level (for level 2, within the same
// group). Errors: LevelMismatch, DivisionByZeroWeight, UnknownId.
double relative_importance(const HcvAllocation& alloc, const CompetenceId& a, const CompetenceId& b);

}  // namespace compgap
