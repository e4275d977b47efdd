#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "compgap/competence_tree.h"

namespace compgap {

// Dense candidates x competences matrix, row-major.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  // Errors: ColumnMismatch when values.size() != rows * cols.
  ScoreMatrix(std::vector<std::string> candidates, std::vector<CompetenceId> competences,
              std::vector<double> values);

  std::size_t rows() const noexcept { return candidates_.size(); }
  std::size_t cols() const noexcept { return competences_.size(); }

  const std::vector<std::string>& candidates() const noexcept { return candidates_; }
  const std::vector<CompetenceId>& competences() const noexcept { return competences_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  double& at(std::size_t row, std::size_t col) { return values_[row * cols() + col]; }
  std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols(), cols()}; }
  std::vector<double> column(std::size_t c) const;

  // Errors: CandidateMismatch / ColumnMismatch when the label is absent.
  std::size_t row_index(const std::string& candidate) const;
  std::size_t col_index(const CompetenceId& id) const;

  // New matrix restricted to `keep` (in the given order).
  ScoreMatrix select_rows(std::span<const std::string> keep) const;

 private:
  std::vector<std::string> candidates_;
  std::vector<CompetenceId> competences_;
  std::vector<double> values_;
};

// Acquired (or required) competence scores at one tree level. Every value lies
// in [1, 5] and the column set is exactly the tree's nodes at `level`, in tree order.
class AcdMatrix {
 public:
  AcdMatrix() = default;
  // Errors: LevelMismatch, IncompleteMatrix (column set differs from the tree
  // level), ScoreOutOfRange.
  AcdMatrix(int level, ScoreMatrix scores, const CompetenceTree& tree);

  int level() const noexcept { return level_; }
  const ScoreMatrix& scores() const noexcept { return scores_; }
  std::size_t rows() const noexcept { return scores_.rows(); }
  std::size_t cols() const noexcept { return scores_.cols(); }
  const std::vector<std::string>& candidates() const noexcept { return scores_.candidates(); }
  const std::vector<CompetenceId>& competences() const noexcept { return scores_.competences(); }
  double at(std::size_t r, std::size_t c) const { return scores_.at(r, c); }

  AcdMatrix select_rows(std::span<const std::string> keep, const CompetenceTree& tree) const;

 private:
  int level_ = 0;
  ScoreMatrix scores_;
};

}  // namespace compgap
