#include "compgap/scott_knott.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "compgap/distributions.h"
#include "compgap/error.h"

namespace compgap {

SplitResult best_split(std::span<const double> sorted_means, double k_blocks) {
  const std::size_t n = sorted_means.size();
  if (n < 2) throw Error(ErrorCode::TooFewMeans, "a split needs at least two means");
  if (!std::is_sorted(sorted_means.begin(), sorted_means.end())) {
    throw Error(ErrorCode::UnsortedInput, "means must be sorted ascending");
  }
  double total = 0.0;
  for (double v : sorted_means) total += v;
  const double grand = total / static_cast<double>(n);

  SplitResult best{1, -1.0};
  double lower_sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    lower_sum += sorted_means[i - 1];
    const double n1 = static_cast<double>(i);
    const double n2 = static_cast<double>(n - i);
    const double m1 = lower_sum / n1;
    const double m2 = (total - lower_sum) / n2;
    const double bg = k_blocks * (n1 * (m1 - grand) * (m1 - grand) + n2 * (m2 - grand) * (m2 - grand));
    if (bg > best.bg_ss) best = {i, bg};
  }
  return best;
}

double sk_lambda(double bg_ss, double s2) {
  constexpr double pi = std::numbers::pi;
  return pi / (2.0 * (pi - 2.0)) * bg_ss / s2;
}

int sk_degrees_of_freedom(std::size_t group_size) {
  const double nu = static_cast<double>(group_size) / (std::numbers::pi - 2.0);
  return std::max(1, static_cast<int>(std::lround(nu)));
}

std::size_t ClusterPartition::cluster_of(const std::string& candidate) const {
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (const auto& m : clusters[i].members) {
      if (m.candidate == candidate) return i + 1;
    }
  }
  return 0;
}

namespace {

void partition(std::vector<CandidateMean> group, double s2, double k_blocks, double alpha,
               std::vector<std::vector<CandidateMean>>& out, std::vector<SkTest>& trace) {
  if (group.size() < 2) {
    out.push_back(std::move(group));
    return;
  }
  std::vector<double> means;
  means.reserve(group.size());
  for (const auto& g : group) means.push_back(g.mean);

  SkTest test;
  for (const auto& g : group) test.group.push_back(g.candidate);
  const auto split = best_split(means, k_blocks);
  test.split_index = split.index;
  test.bg_ss = split.bg_ss;
  test.lambda = sk_lambda(split.bg_ss, s2);
  test.nu = sk_degrees_of_freedom(group.size());
  test.critical = dist::chi_squared_critical(test.nu, alpha);
  test.split = test.lambda > test.critical;
  trace.push_back(test);

  if (!test.split) {
    out.push_back(std::move(group));
    return;
  }
  std::vector<CandidateMean> upper(group.begin() + static_cast<std::ptrdiff_t>(split.index), group.end());
  group.resize(split.index);
  partition(std::move(group), s2, k_blocks, alpha, out, trace);
  partition(std::move(upper), s2, k_blocks, alpha, out, trace);
}

}  // namespace

ClusterPartition scott_knott(std::span<const CandidateMean> means, double s2, double k_blocks, double alpha) {
  if (means.empty()) throw Error(ErrorCode::EmptyInput, "no candidates to cluster");
  if (!(s2 > 0.0) || !std::isfinite(s2)) {
    throw Error(ErrorCode::NonpositiveVariance, "error variance must be positive, got " + std::to_string(s2));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1)");

  // Ascending by mean; the candidate id breaks ties so input order never matters.
  std::vector<CandidateMean> sorted(means.begin(), means.end());
  std::sort(sorted.begin(), sorted.end(), [](const CandidateMean& a, const CandidateMean& b) {
    if (a.mean != b.mean) return a.mean < b.mean;
    return a.candidate < b.candidate;
  });

  std::vector<std::vector<CandidateMean>> groups;
  ClusterPartition result;
  partition(std::move(sorted), s2, k_blocks, alpha, groups, result.trace);

  // Groups come out in ascending order; report best first.
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    Cluster cluster;
    cluster.members.assign(it->rbegin(), it->rend());
    double sum = 0.0;
    for (const auto& m : cluster.members) sum += m.mean;
    cluster.mean_of_means = sum / static_cast<double>(cluster.members.size());
    result.clusters.push_back(std::move(cluster));
  }
  return result;
}

}  // namespace compgap
