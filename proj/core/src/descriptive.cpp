#include "compgap/descriptive.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "compgap/error.h"

namespace compgap {

double mean(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "mean of an empty sequence");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

DescriptiveStats describe(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "cannot describe an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  DescriptiveStats s;
  s.n = sorted.size();
  s.mean = mean(sorted);
  if (s.n >= 2) s.sd = sample_sd(sorted);
  const std::size_t mid = s.n / 2;
  s.median = s.n % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  s.min = sorted.front();
  s.max = sorted.back();
  if (s.min == s.max) {
    // Constant sample: avoid summation residue in the mean.
    s.mean = s.min;
    if (s.sd) s.sd = 0.0;
  }
  return s;
}

}  // namespace compgap
