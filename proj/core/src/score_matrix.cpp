#include "compgap/score_matrix.h"

#include <algorithm>
#include <cmath>

#include "compgap/error.h"

namespace compgap {

namespace {
// Convex combinations of in-range scores may land a few ulps outside.
constexpr double kRangeSlack = 1e-9;
}  // namespace

ScoreMatrix::ScoreMatrix(std::vector<std::string> candidates, std::vector<CompetenceId> competences,
                         std::vector<double> values)
    : candidates_(std::move(candidates)), competences_(std::move(competences)), values_(std::move(values)) {
  if (values_.size() != candidates_.size() * competences_.size()) {
    throw Error(ErrorCode::ColumnMismatch, "matrix has " + std::to_string(values_.size()) + " values for " +
                                               std::to_string(candidates_.size()) + "x" +
                                               std::to_string(competences_.size()) + " shape");
  }
}

std::vector<double> ScoreMatrix::column(std::size_t c) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

std::size_t ScoreMatrix::row_index(const std::string& candidate) const {
  auto it = std::find(candidates_.begin(), candidates_.end(), candidate);
  if (it == candidates_.end()) throw Error(ErrorCode::CandidateMismatch, "unknown candidate " + candidate);
  return static_cast<std::size_t>(it - candidates_.begin());
}

std::size_t ScoreMatrix::col_index(const CompetenceId& id) const {
  auto it = std::find(competences_.begin(), competences_.end(), id);
  if (it == competences_.end()) throw Error(ErrorCode::ColumnMismatch, "matrix has no column " + id.str());
  return static_cast<std::size_t>(it - competences_.begin());
}

ScoreMatrix ScoreMatrix::select_rows(std::span<const std::string> keep) const {
  std::vector<double> values;
  values.reserve(keep.size() * cols());
  for (const auto& name : keep) {
    auto r = row(row_index(name));
    values.insert(values.end(), r.begin(), r.end());
  }
  return ScoreMatrix({keep.begin(), keep.end()}, competences_, std::move(values));
}

AcdMatrix::AcdMatrix(int level, ScoreMatrix scores, const CompetenceTree& tree)
    : level_(level), scores_(std::move(scores)) {
  const auto& expected = tree.level_ids(level);
  for (const auto& id : scores_.competences()) {
    if (id.level() != level) {
      throw Error(ErrorCode::LevelMismatch, id.str() + " is not a level-" + std::to_string(level) + " competence");
    }
  }
  if (scores_.competences() != expected) {
    for (const auto& id : expected) {
      if (std::find(scores_.competences().begin(), scores_.competences().end(), id) ==
          scores_.competences().end()) {
        throw Error(ErrorCode::IncompleteMatrix, "no scores for competence " + id.str());
      }
    }
    for (const auto& id : scores_.competences()) {
      if (!tree.contains(id)) throw Error(ErrorCode::IncompleteMatrix, "competence " + id.str() + " not in tree");
    }
    throw Error(ErrorCode::IncompleteMatrix, "level-" + std::to_string(level) +
                                                 " columns are duplicated or not in tree order");
  }
  for (std::size_t r = 0; r < scores_.rows(); ++r) {
    for (std::size_t c = 0; c < scores_.cols(); ++c) {
      const double v = scores_.at(r, c);
      if (!(v >= 1.0 - kRangeSlack && v <= 5.0 + kRangeSlack)) {
        throw Error(ErrorCode::ScoreOutOfRange, "score " + std::to_string(v) + " for " + scores_.candidates()[r] +
                                                    " / " + scores_.competences()[c].str() + " outside [1, 5]");
      }
    }
  }
}

AcdMatrix AcdMatrix::select_rows(std::span<const std::string> keep, const CompetenceTree& tree) const {
  return AcdMatrix(level_, scores_.select_rows(keep), tree);
}

}  // namespace compgap
