#include "compgap/prioritization.h"

#include "compgap/error.h"

namespace compgap {

WeightScheme::WeightScheme(std::vector<std::pair<CompetenceId, double>> weights) : weights_(std::move(weights)) {}

double WeightScheme::weight(const CompetenceId& id) const {
  for (const auto& [k, w] : weights_) {
    if (k == id) return w;
  }
  throw Error(ErrorCode::WeightCoverageGap, "weight scheme has no entry for " + id.str());
}

double WeightScheme::total() const {
  double sum = 0.0;
  for (const auto& [k, w] : weights_) sum += w;
  return sum;
}

WeightScheme absolute_weights(const HcvAllocation& alloc, const CompetenceTree& tree) {
  validate_allocation(alloc, tree);
  std::vector<std::pair<CompetenceId, double>> raw;
  double total = 0.0;
  for (const auto& root : tree.roots()) {
    const double group = alloc.level1.at(root) / alloc.f;
    for (const auto& child : tree.children(root)) {
      const double w = group * (alloc.level2.at(child) / alloc.f);
      raw.emplace_back(child, w);
      total += w;
    }
  }
  for (auto& [id, w] : raw) w /= total;
  return WeightScheme(std::move(raw));
}

ScoreMatrix apply_weights(const ScoreMatrix& level2, const WeightScheme& scheme) {
  std::vector<double> col_weight;
  col_weight.reserve(level2.cols());
  for (const auto& id : level2.competences()) col_weight.push_back(scheme.weight(id));
  std::vector<double> values(level2.values());
  for (std::size_t r = 0; r < level2.rows(); ++r) {
    for (std::size_t c = 0; c < level2.cols(); ++c) values[r * level2.cols() + c] *= col_weight[c];
  }
  return ScoreMatrix(level2.candidates(), level2.competences(), std::move(values));
}

double relative_importance(const HcvAllocation& alloc, const CompetenceId& a, const CompetenceId& b) {
  if (a.level() != b.level()) {
    throw Error(ErrorCode::LevelMismatch, a.str() + " and " + b.str() + " are at different levels");
  }
  const std::map<CompetenceId, double>* amounts = nullptr;
  if (a.level() == 1) {
    amounts = &alloc.level1;
  } else if (a.level() == 2) {
    if (a.prefix_parent() != b.prefix_parent()) {
      throw Error(ErrorCode::LevelMismatch, a.str() + " and " + b.str() + " belong to different groups");
    }
    amounts = &alloc.level2;
  } else {
    throw Error(ErrorCode::LevelMismatch, "allocations exist for levels 1 and 2 only");
  }
  auto ia = amounts->find(a);
  auto ib = amounts->find(b);
  if (ia == amounts->end()) throw Error(ErrorCode::UnknownId, "no allocation for " + a.str());
  if (ib == amounts->end()) throw Error(ErrorCode::UnknownId, "no allocation for " + b.str());
  if (ib->second == 0.0) throw Error(ErrorCode::DivisionByZeroWeight, b.str() + " has zero allocation");
  return ia->second / ib->second;
}

}  // namespace compgap
