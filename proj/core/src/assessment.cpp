#include "compgap/assessment.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "compgap/error.h"

namespace compgap {

namespace {

constexpr double kWeightTolerance = 1e-9;

}  // namespace

std::string_view to_string(AssessorRole role) {
  switch (role) {
    case AssessorRole::Self: return "self";
    case AssessorRole::Colleague: return "colleague";
    case AssessorRole::Manager: return "manager";
  }
  return "self";
}

std::string_view to_string(AssessmentType type) {
  switch (type) {
    case AssessmentType::MultiSource: return "multi_source";
    case AssessmentType::SelfAssessment: return "self_assessment";
  }
  return "self_assessment";
}

AssessorRole parse_assessor_role(std::string_view text) {
  if (text == "self") return AssessorRole::Self;
  if (text == "colleague") return AssessorRole::Colleague;
  if (text == "manager") return AssessorRole::Manager;
  throw Error(ErrorCode::ParseError, "unknown assessor role '" + std::string(text) + "'");
}

AssessmentType parse_assessment_type(std::string_view text) {
  if (text == "multi_source") return AssessmentType::MultiSource;
  if (text == "self_assessment") return AssessmentType::SelfAssessment;
  throw Error(ErrorCode::ParseError, "unknown assessment type '" + std::string(text) + "'");
}

double score_statement_set(std::span<const StatementResponse> responses) {
  if (responses.empty()) throw Error(ErrorCode::EmptyResponseSet, "no responses to score");
  const auto& first = responses.front();
  double weight_sum = 0.0;
  double score = 0.0;
  for (const auto& r : responses) {
    if (r.assessee != first.assessee || r.competence != first.competence ||
        r.assessment_type != first.assessment_type) {
      throw Error(ErrorCode::MixedKeys, "response set mixes assessees, competences or assessment types");
    }
    if (r.value < 1 || r.value > 5) {
      throw Error(ErrorCode::ScoreOutOfRange, "Likert value " + std::to_string(r.value) + " outside 1..5");
    }
    if (!(r.weight >= 0.0 && r.weight <= 1.0)) {
      throw Error(ErrorCode::WeightSumViolation, "statement weight outside [0, 1]");
    }
    weight_sum += r.weight;
    score += r.weight * r.value;
  }
  if (std::abs(weight_sum - 1.0) > kWeightTolerance) {
    throw Error(ErrorCode::WeightSumViolation, "statement weights for " + first.assessee + " / " +
                                                   first.competence.str() + " sum to " +
                                                   std::to_string(weight_sum));
  }
  return score;
}

AssessmentTypeWeights::AssessmentTypeWeights(const std::map<AssessmentType, double>& raw) {
  double total = 0.0;
  for (const auto& [type, w] : raw) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::WeightSumViolation, "assessment type weight must be non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::WeightSumViolation, "assessment type weights are all zero");
  for (const auto& [type, w] : raw) weights_[type] = w / total;
}

AssessmentTypeWeights AssessmentTypeWeights::equal(std::span<const AssessmentType> present) {
  std::map<AssessmentType, double> raw;
  for (auto t : present) raw[t] = 1.0;
  return AssessmentTypeWeights(raw);
}

double combine_assessment_types(const std::map<AssessmentType, double>& values,
                                const AssessmentTypeWeights& weights) {
  if (weights.empty()) throw Error(ErrorCode::WeightSumViolation, "no assessment type weights");
  double out = 0.0;
  for (const auto& [type, w] : weights.weights()) {
    auto it = values.find(type);
    if (it == values.end()) {
      if (w == 0.0) continue;
      throw Error(ErrorCode::MissingTypeValue, "no value for assessment type " + std::string(to_string(type)));
    }
    out += w * it->second;
  }
  return out;
}

AcdMatrix acd3_from_responses(std::span<const StatementResponse> responses, const CompetenceTree& tree,
                              const AssessmentTypeWeights& type_weights) {
  if (responses.empty()) throw Error(ErrorCode::EmptyResponseSet, "no responses");

  std::vector<std::string> candidates;
  using Key = std::tuple<std::string, CompetenceId, AssessmentType>;
  std::map<Key, std::vector<StatementResponse>> groups;
  for (const auto& r : responses) {
    if (!tree.contains(r.competence) || r.competence.level() != CompetenceTree::kDepth) {
      throw Error(ErrorCode::LevelMismatch, "responses must target leaf competences, got " + r.competence.str());
    }
    if (std::find(candidates.begin(), candidates.end(), r.assessee) == candidates.end()) {
      candidates.push_back(r.assessee);
    }
    groups[{r.assessee, r.competence, r.assessment_type}].push_back(r);
  }

  const auto& leaves = tree.leaves();
  std::vector<double> values;
  values.reserve(candidates.size() * leaves.size());
  for (const auto& cand : candidates) {
    for (const auto& leaf : leaves) {
      std::map<AssessmentType, double> per_type;
      std::vector<AssessmentType> present;
      for (auto type : {AssessmentType::MultiSource, AssessmentType::SelfAssessment}) {
        auto it = groups.find({cand, leaf, type});
        if (it == groups.end()) continue;
        per_type[type] = score_statement_set(it->second);
        present.push_back(type);
      }
      if (present.empty()) {
        throw Error(ErrorCode::IncompleteMatrix, "no responses for " + cand + " / " + leaf.str());
      }
      const auto weights = type_weights.empty() ? AssessmentTypeWeights::equal(present) : type_weights;
      values.push_back(combine_assessment_types(per_type, weights));
    }
  }
  return AcdMatrix(3, ScoreMatrix(std::move(candidates), leaves, std::move(values)), tree);
}

RollupWeights::RollupWeights(std::map<CompetenceId, std::vector<double>> by_parent, const CompetenceTree& tree,
                             int parent_level)
    : parent_level_(parent_level), by_parent_(std::move(by_parent)) {
  if (parent_level < 1 || parent_level >= CompetenceTree::kDepth) {
    throw Error(ErrorCode::LevelMismatch, "rollup parents must be at level 1 or 2");
  }
  const auto& parents = tree.level_ids(parent_level);
  for (const auto& [id, w] : by_parent_) {
    if (std::find(parents.begin(), parents.end(), id) == parents.end()) {
      throw Error(ErrorCode::WeightCoverageGap, "rollup weights given for " + id.str() + ", not a level-" +
                                                    std::to_string(parent_level) + " node");
    }
  }
  for (const auto& parent : parents) {
    auto it = by_parent_.find(parent);
    if (it == by_parent_.end()) throw Error(ErrorCode::WeightCoverageGap, "no rollup weights for " + parent.str());
    if (it->second.size() != tree.children(parent).size()) {
      throw Error(ErrorCode::WeightCoverageGap, "rollup weights for " + parent.str() + " cover " +
                                                    std::to_string(it->second.size()) + " of " +
                                                    std::to_string(tree.children(parent).size()) + " children");
    }
    double sum = 0.0;
    for (double w : it->second) {
      if (!(w >= 0.0 && w <= 1.0)) {
        throw Error(ErrorCode::WeightSumViolation, "rollup weight outside [0, 1] under " + parent.str());
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightTolerance) {
      throw Error(ErrorCode::WeightSumViolation, "rollup weights under " + parent.str() + " sum to " +
                                                     std::to_string(sum));
    }
  }
}

RollupWeights RollupWeights::equal(const CompetenceTree& tree, int parent_level) {
  std::map<CompetenceId, std::vector<double>> by_parent;
  for (const auto& parent : tree.level_ids(parent_level)) {
    const auto n = tree.children(parent).size();
    by_parent[parent] = std::vector<double>(n, 1.0 / static_cast<double>(n));
  }
  return RollupWeights(std::move(by_parent), tree, parent_level);
}

std::span<const double> RollupWeights::for_parent(const CompetenceId& parent) const {
  auto it = by_parent_.find(parent);
  if (it == by_parent_.end()) throw Error(ErrorCode::WeightCoverageGap, "no rollup weights for " + parent.str());
  return it->second;
}

AcdMatrix rollup(const AcdMatrix& child, const RollupWeights& weights, const CompetenceTree& tree) {
  const int parent_level = child.level() - 1;
  if (child.level() < 2 || weights.parent_level() != parent_level) {
    throw Error(ErrorCode::LevelMismatch, "cannot roll level-" + std::to_string(child.level()) +
                                              " scores with level-" + std::to_string(weights.parent_level()) +
                                              " weights");
  }
  const auto& parents = tree.level_ids(parent_level);
  const auto& child_cols = child.competences();

  // Column offsets of each parent's children; children are contiguous in tree order.
  std::vector<std::size_t> first_col;
  first_col.reserve(parents.size());
  std::size_t offset = 0;
  for (const auto& p : parents) {
    first_col.push_back(offset);
    offset += tree.children(p).size();
  }
  if (offset != child_cols.size()) {
    throw Error(ErrorCode::LevelMismatch, "child matrix does not match the tree");
  }

  std::vector<double> values(child.rows() * parents.size());
  for (std::size_t r = 0; r < child.rows(); ++r) {
    for (std::size_t p = 0; p < parents.size(); ++p) {
      auto w = weights.for_parent(parents[p]);
      double acc = 0.0;
      for (std::size_t c = 0; c < w.size(); ++c) acc += w[c] * child.at(r, first_col[p] + c);
      values[r * parents.size() + p] = acc;
    }
  }
  return AcdMatrix(parent_level, ScoreMatrix(child.candidates(), parents, std::move(values)), tree);
}

Level1Scores level1_scores(const AcdMatrix& acd3, const CompetenceTree& tree, const RollupWeights& leaf_to_level2,
                           const RollupWeights& level2_to_level1) {
  if (acd3.level() != 3) throw Error(ErrorCode::LevelMismatch, "level1_scores expects level-3 scores");
  AcdMatrix level2 = rollup(acd3, leaf_to_level2, tree);
  AcdMatrix level1 = rollup(level2, level2_to_level1, tree);
  std::vector<double> total(acd3.rows());
  for (std::size_t r = 0; r < acd3.rows(); ++r) {
    auto row = acd3.scores().row(r);
    double sum = 0.0;
    for (double v : row) sum += v;
    total[r] = sum / static_cast<double>(row.size());
  }
  return {std::move(level2), std::move(level1), std::move(total)};
}

std::vector<double> node_scores(const AcdMatrix& acd3, const CompetenceId& node, const CompetenceTree& tree,
                                const RollupWeights& leaf_to_level2, const RollupWeights& level2_to_level1) {
  if (acd3.level() != 3) throw Error(ErrorCode::LevelMismatch, "node_scores expects level-3 scores");
  const int level = tree.node(node).level;
  if (level == 3) return acd3.scores().column(acd3.scores().col_index(node));
  AcdMatrix level2 = rollup(acd3, leaf_to_level2, tree);
  if (level == 2) return level2.scores().column(level2.scores().col_index(node));
  AcdMatrix level1 = rollup(level2, level2_to_level1, tree);
  return level1.scores().column(level1.scores().col_index(node));
}

}  // namespace compgap
