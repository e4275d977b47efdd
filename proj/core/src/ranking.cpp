#include "compgap/ranking.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "compgap/descriptive.h"
#include "compgap/error.h"

namespace compgap {

EligibilityReport filter_eligible(const AcdMatrix& acd3, const CompetenceTree& tree,
                                  std::span<const EligibilityRule> rules, const RollupWeights& leaf_to_level2,
                                  const RollupWeights& level2_to_level1) {
  std::vector<std::vector<double>> rule_scores;
  rule_scores.reserve(rules.size());
  for (const auto& rule : rules) {
    if (!tree.contains(rule.competence)) {
      throw Error(ErrorCode::UnknownCompetenceInRule, "eligibility rule names unknown competence " +
                                                          rule.competence.str());
    }
    rule_scores.push_back(node_scores(acd3, rule.competence, tree, leaf_to_level2, level2_to_level1));
  }

  EligibilityReport report;
  for (std::size_t r = 0; r < acd3.rows(); ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      if (rule_scores[k][r] < rules[k].min_score) {
        ok = false;
        report.exclusions.push_back({acd3.candidates()[r], rules[k], rule_scores[k][r]});
      }
    }
    if (ok) report.eligible.push_back(acd3.candidates()[r]);
  }
  return report;
}

std::string_view to_string(Qualification q) { return q == Qualification::Over ? "Over-" : "Under-"; }

std::vector<RankingRow> rank_and_label(const ClusterPartition& partition, std::span<const QualificationPoint> points,
                                       const GapMatrix& gaps) {
  std::set<std::string> in_points;
  for (const auto& p : points) in_points.insert(p.candidate);
  std::set<std::string> in_partition;
  for (const auto& c : partition.clusters) {
    for (const auto& m : c.members) in_partition.insert(m.candidate);
  }
  std::set<std::string> in_gaps(gaps.gaps.candidates().begin(), gaps.gaps.candidates().end());
  if (in_points != in_partition || in_points != in_gaps || in_points.size() != points.size()) {
    throw Error(ErrorCode::CandidateMismatch, "partition, qualification points and gap matrix cover different candidates");
  }

  std::vector<RankingRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    RankingRow row;
    row.candidate = p.candidate;
    row.msg = p.msg;
    const double sd = sample_sd(gaps.gaps.row(gaps.gaps.row_index(p.candidate)));
    row.lower = p.msg - sd;
    row.upper = p.msg + sd;
    row.cluster = partition.cluster_of(p.candidate);
    row.qualification = p.msg >= 0.0 ? Qualification::Over : Qualification::Under;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const RankingRow& a, const RankingRow& b) {
    if (a.msg != b.msg) return a.msg > b.msg;
    return a.candidate < b.candidate;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
  return rows;
}

std::string_view to_string(Policy policy) {
  return policy == Policy::MostQualified ? "most_qualified" : "closest_fit";
}

Policy parse_policy(std::string_view text) {
  if (text == "most_qualified") return Policy::MostQualified;
  if (text == "closest_fit") return Policy::ClosestFit;
  throw Error(ErrorCode::InvalidConfig, "unknown policy '" + std::string(text) + "'");
}

std::vector<RankingRow> apply_policy(std::span<const RankingRow> rows, Policy policy) {
  // Cluster order as first seen in the input, which is best-MSG first.
  std::vector<std::size_t> order;
  std::map<std::size_t, std::vector<RankingRow>> by_cluster;
  for (const auto& r : rows) {
    if (!by_cluster.count(r.cluster)) order.push_back(r.cluster);
    by_cluster[r.cluster].push_back(r);
  }
  if (policy == Policy::ClosestFit) {
    std::map<std::size_t, double> distance;
    for (const auto& [cluster, members] : by_cluster) {
      double sum = 0.0;
      for (const auto& m : members) sum += std::abs(m.msg);
      distance[cluster] = sum / static_cast<double>(members.size());
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return distance[a] < distance[b]; });
  }
  std::vector<RankingRow> out;
  out.reserve(rows.size());
  for (auto cluster : order) {
    for (auto& r : by_cluster[cluster]) out.push_back(r);
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = i + 1;
  return out;
}

}  // namespace compgap
