#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace compgap {

struct SplitResult {
  // Size of the lower group: the split falls after sorted_means[index - 1].
  std::size_t index = 0;
  double bg_ss = 0.0;
};

// Best contiguous two-group split of ascending means, maximising the
// between-groups sum of squares scaled by `k_blocks`. Ties resolve to the
// smallest index. Errors: TooFewMeans, UnsortedInput.
SplitResult best_split(std::span<const double> sorted_means, double k_blocks);

// Likelihood-ratio statistic pi / (2 (pi - 2)) * bg_ss / s2.
double sk_lambda(double bg_ss, double s2);
// Degrees of freedom group_size / (pi - 2), rounded to nearest, at least 1.
int sk_degrees_of_freedom(std::size_t group_size);

struct CandidateMean {
  std::string candidate;
  double mean = 0.0;
};

struct Cluster {
  // Members ordered by descending mean.
  std::vector<CandidateMean> members;
  double mean_of_means = 0.0;
};

// One recursion step, kept for audit output.
struct SkTest {
  std::vector<std::string> group;  // ascending order
  std::size_t split_index = 0;
  double bg_ss = 0.0;
  double lambda = 0.0;
  int nu = 0;
  double critical = 0.0;
  bool split = false;
};

struct ClusterPartition {
  // Best (highest mean) cluster first.
  std::vector<Cluster> clusters;
  std::vector<SkTest> trace;

  // 1-based cluster index of `candidate`, 0 when absent.
  std::size_t cluster_of(const std::string& candidate) const;
};

// Recursive Scott-Knott partition of candidate means. `s2` is the error mean
// square of the full block design and is reused at every depth.
// Errors: EmptyInput, NonpositiveVariance, InvalidAlpha.
ClusterPartition scott_knott(std::span<const CandidateMean> means, double s2, double k_blocks, double alpha);

}  // namespace compgap
