#pragma once

#include <optional>
#include <string_view>

#include "compgap/gap.h"

namespace compgap {

struct AnovaFactor {
  double ss = 0.0;
  int df = 0;
  double ms = 0.0;
  // Absent when the error mean square is zero.
  std::optional<double> f;
  std::optional<double> p;
  // Absent when SS_factor + SS_error is zero.
  std::optional<double> partial_eta_squared;
};

// Additive two-way layout without interaction: candidates are treatments,
// level-2 competences are blocks.
struct AnovaTable {
  AnovaFactor treatments;
  AnovaFactor blocks;
  double ss_error = 0.0;
  int df_error = 0;
  double ms_error = 0.0;
  double ss_total = 0.0;

  // Error mean square; the variance estimate used by Scott-Knott.
  double s2() const noexcept { return ms_error; }
  // True when the residual variance vanishes and F is undefined.
  bool degenerate() const noexcept { return !treatments.f.has_value(); }
};

// Errors: IncompleteMatrix (fewer than 2 treatments or blocks, or non-finite cells).
AnovaTable rcbd_anova(const GapMatrix& gaps);

enum class EffectSize { Negligible, Small, Medium, Large };

std::string_view to_string(EffectSize size);

// Benchmarks 0.01 / 0.06 / 0.14. Errors: OutOfRange outside [0, 1].
EffectSize effect_size_label(double partial_eta_squared);

}  // namespace compgap
