#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace compgap {

struct DescriptiveStats {
  std::size_t n = 0;
  double mean = 0.0;
  // Sample standard deviation (divisor n - 1); absent for n < 2.
  std::optional<double> sd;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Errors: EmptyInput.
DescriptiveStats describe(std::span<const double> values);

double mean(std::span<const double> values);
// Sample standard deviation, 0 for fewer than two values.
double sample_sd(std::span<const double> values);

}  // namespace compgap
