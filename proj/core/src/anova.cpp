#include "compgap/anova.h"

#include <cmath>
#include <vector>

#include "compgap/distributions.h"
#include "compgap/error.h"

namespace compgap {

namespace {

void finish_factor(AnovaFactor& factor, const AnovaTable& t, bool degenerate) {
  factor.ms = factor.ss / factor.df;
  if (!degenerate) {
    factor.f = factor.ms / t.ms_error;
    factor.p = dist::f_sf(*factor.f, factor.df, t.df_error);
  }
  const double denom = factor.ss + t.ss_error;
  if (denom > 0.0) factor.partial_eta_squared = factor.ss / denom;
}

}  // namespace

AnovaTable rcbd_anova(const GapMatrix& gaps) {
  const auto& m = gaps.gaps;
  const std::size_t t = m.rows();
  const std::size_t c = m.cols();
  if (t < 2 || c < 2) {
    throw Error(ErrorCode::IncompleteMatrix, "block design needs at least 2 candidates and 2 competences");
  }
  for (double v : m.values()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::IncompleteMatrix, "gap matrix has a missing or non-finite cell");
  }

  std::vector<double> row_mean(t, 0.0);
  std::vector<double> col_mean(c, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      row_mean[i] += m.at(i, j);
      col_mean[j] += m.at(i, j);
    }
  }
  for (auto& v : row_mean) {
    grand += v;
    v /= static_cast<double>(c);
  }
  for (auto& v : col_mean) v /= static_cast<double>(t);
  grand /= static_cast<double>(t * c);

  AnovaTable table;
  for (std::size_t i = 0; i < t; ++i) table.treatments.ss += (row_mean[i] - grand) * (row_mean[i] - grand);
  table.treatments.ss *= static_cast<double>(c);
  for (std::size_t j = 0; j < c; ++j) table.blocks.ss += (col_mean[j] - grand) * (col_mean[j] - grand);
  table.blocks.ss *= static_cast<double>(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const double y = m.at(i, j);
      const double resid = y - row_mean[i] - col_mean[j] + grand;
      table.ss_error += resid * resid;
      table.ss_total += (y - grand) * (y - grand);
    }
  }

  table.treatments.df = static_cast<int>(t - 1);
  table.blocks.df = static_cast<int>(c - 1);
  table.df_error = static_cast<int>((t - 1) * (c - 1));
  table.ms_error = table.ss_error / table.df_error;

  // Residuals at rounding-noise level relative to the total count as zero.
  const bool degenerate = table.ss_error <= 1e-24 + 1e-13 * table.ss_total;
  if (degenerate) {
    table.ss_error = 0.0;
    table.ms_error = 0.0;
  }
  finish_factor(table.treatments, table, degenerate);
  finish_factor(table.blocks, table, degenerate);
  return table;
}

std::string_view to_string(EffectSize size) {
  switch (size) {
    case EffectSize::Negligible: return "negligible";
    case EffectSize::Small: return "small";
    case EffectSize::Medium: return "medium";
    case EffectSize::Large: return "large";
  }
  return "negligible";
}

EffectSize effect_size_label(double partial_eta_squared) {
  if (!(partial_eta_squared >= 0.0 && partial_eta_squared <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "partial eta squared must lie in [0, 1]");
  }
  if (partial_eta_squared < 0.01) return EffectSize::Negligible;
  if (partial_eta_squared < 0.06) return EffectSize::Small;
  if (partial_eta_squared < 0.14) return EffectSize::Medium;
  return EffectSize::Large;
}

}  // namespace compgap
