#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compgap/gap.h"

namespace compgap {

struct PlotPoint {
  QualificationPoint point;
  // 1-based cluster index; 0 renders in the neutral color.
  std::size_t cluster = 0;
};

// Qualification-space scatter: SOQ rightward, SUQ downward from 0 at the top,
// dashed equilibrium diagonal SUQ = -SOQ. Fixed 800x600 viewport, no
// timestamps, colors fixed by cluster index. Errors: EmptyPointSet.
std::string render_qs_plot(std::span<const PlotPoint> points, std::string_view title = "Qualification Space");

// Renders the plot from a run's result.json document. Errors: ParseError, EmptyPointSet.
std::string render_qs_plot_from_result(std::string_view result_json);

}  // namespace compgap
