#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "compgap/io.h"
#include "compgap/pipeline.h"
#include "compgap/plot.h"
#include "expect_error.h"
#include "fixtures.h"

namespace compgap {
namespace {

using testing::canonical_tree;
using testing::code_of;
using testing::id;

const RunResult& case_study_run() {
  static const RunResult r = run_pipeline(canonical_tree(), testing::case_study_acd3(), testing::case_study_job(), {});
  return r;
}

std::set<std::string> members(const Cluster& c) {
  std::set<std::string> out;
  for (const auto& m : c.members) out.insert(m.candidate);
  return out;
}

TEST(Pipeline, CaseStudyClusters) {
  const auto& r = case_study_run();
  ASSERT_EQ(r.partition.clusters.size(), 5u);
  using S = std::set<std::string>;
  EXPECT_EQ(members(r.partition.clusters[0]), (S{"Cnd 4", "Cnd 10"}));
  EXPECT_EQ(members(r.partition.clusters[1]), (S{"Cnd 1", "Cnd 5", "Cnd 8", "Cnd 9", "Cnd 11"}));
  EXPECT_EQ(members(r.partition.clusters[2]), (S{"Cnd 3", "Cnd 7"}));
  EXPECT_EQ(members(r.partition.clusters[3]), (S{"Cnd 2"}));
  EXPECT_EQ(members(r.partition.clusters[4]), (S{"Cnd 6"}));
  EXPECT_EQ(r.recommendation.front().candidate, "Cnd 4");
}

TEST(Pipeline, ClosestFitPolicy) {
  PipelineConfig config;
  config.policy = Policy::ClosestFit;
  const auto r = run_pipeline(canonical_tree(), testing::case_study_acd3(), testing::case_study_job(), config);
  std::set<std::string> first;
  for (const auto& row : r.recommendation) {
    if (row.cluster == r.recommendation.front().cluster) first.insert(row.candidate);
  }
  EXPECT_EQ(first, (std::set<std::string>{"Cnd 1", "Cnd 5", "Cnd 8", "Cnd 9", "Cnd 11"}));
}

TEST(Pipeline, PerfectFit) {
  const auto& tree = canonical_tree();
  const auto job = testing::case_study_job();
  const auto req = job.rcd3_in_tree_order(tree);
  std::vector<double> values;
  for (int c = 0; c < 3; ++c) values.insert(values.end(), req.begin(), req.end());
  const AcdMatrix acd(3, ScoreMatrix({"A", "B", "C"}, tree.leaves(), values), tree);
  const auto r = run_pipeline(tree, acd, job, {});
  for (double g : r.gaps.gaps.values()) EXPECT_EQ(g, 0.0);
  EXPECT_EQ(r.partition.clusters.size(), 1u);
  for (const auto& p : r.points) EXPECT_EQ(p.msg, 0.0);
  EXPECT_NO_THROW(render_outputs(r, tree));
}

JobProfile flat_job(double required) {
  const auto& tree = canonical_tree();
  std::map<CompetenceId, RcdEntry> rcd;
  for (const auto& leaf : tree.leaves()) rcd[leaf] = required;
  HcvAllocation hcv;
  for (const auto& p : tree.level_ids(1)) hcv.level1[p] = 100.0 / 3;
  for (const auto& p : tree.level_ids(2)) hcv.level2[p] = 25;
  return build_job_profile(tree, "flat", rcd, hcv, {});
}

TEST(Pipeline, DegenerateVarianceWithDistinctMeans) {
  const auto& tree = canonical_tree();
  std::vector<double> values(48, 3.0);
  values.insert(values.end(), 48, 4.0);
  const AcdMatrix acd(3, ScoreMatrix({"A", "B"}, tree.leaves(), values), tree);
  try {
    run_pipeline(tree, acd, flat_job(3.0), {});
    FAIL() << "expected DegenerateVariance";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateVariance);
    EXPECT_EQ(e.location(), "stage clustering");
  }
}

TEST(Pipeline, SingleEligibleCandidate) {
  const auto& tree = canonical_tree();
  auto job = testing::case_study_job(tree, {{id("C1.1"), 4.2, "lead"}, {id("C1.2"), 4.0, "business"}});
  const auto r = run_pipeline(tree, testing::case_study_acd3(), job, {});
  ASSERT_EQ(r.eligibility.eligible.size(), 1u);
  EXPECT_FALSE(r.anova.has_value());
  EXPECT_EQ(r.ranking.size(), 1u);
  EXPECT_EQ(r.ranking[0].cluster, 1u);
  EXPECT_EQ(r.acd3.rows(), 11u);
  EXPECT_EQ(r.acd2.rows(), 1u);
}

TEST(Pipeline, NobodyEligible) {
  const auto& tree = canonical_tree();
  auto job = testing::case_study_job(tree, {{id("C1"), 5.0, "perfect"}});
  try {
    run_pipeline(tree, testing::case_study_acd3(), job, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    EXPECT_EQ(e.location(), "stage eligibility");
  }
}

TEST(Pipeline, ConfigValidation) {
  PipelineConfig c;
  c.alpha = 1.0;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::InvalidConfig);
  c.alpha = 0.05;
  c.display_decimals = -1;
  EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::InvalidConfig);
}

// Reordering candidates changes nothing per candidate: MSG, cluster and rank.
TEST(Pipeline, PermutationInvarianceProperty) {
  const auto& tree = canonical_tree();
  const auto base = testing::case_study_acd3();
  const auto& ref = case_study_run();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto order = base.candidates();
    std::shuffle(order.begin(), order.end(), rng);
    const auto r = run_pipeline(tree, base.select_rows(order, tree), testing::case_study_job(), {});
    ASSERT_EQ(r.ranking.size(), ref.ranking.size());
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
      EXPECT_EQ(r.ranking[i].candidate, ref.ranking[i].candidate);
      EXPECT_NEAR(r.ranking[i].msg, ref.ranking[i].msg, 1e-15);
      EXPECT_EQ(r.ranking[i].cluster, ref.ranking[i].cluster);
    }
    EXPECT_NEAR(*r.anova->treatments.f, *ref.anova->treatments.f, 1e-9);
  }
}

TEST(Outputs, ArtifactsAndComposability) {
  const auto& r = case_study_run();
  const auto files = render_outputs(r, canonical_tree());
  std::vector<std::string> names;
  for (const auto& f : files) names.push_back(f.first);
  EXPECT_EQ(names, (std::vector<std::string>{"acd_level2.csv", "acd_level1.csv", "stats.csv", "weights.csv",
                                             "weighted.csv", "gaps.csv", "qs_points.csv", "anova.csv",
                                             "ranking.csv", "result.json", "qs_plot.svg"}));
  std::map<std::string, std::string> by_name(files.begin(), files.end());
  EXPECT_EQ(render_qs_plot_from_result(by_name["result.json"]), by_name["qs_plot.svg"]);
  EXPECT_NE(by_name["ranking.csv"].find("\n1,Cnd 4,0.04,0.00,0.07,1,Over-\n"), std::string::npos);
  EXPECT_NE(by_name["anova.csv"].find("candidates,0.671918,10,0.067192,43.144,"), std::string::npos);
}

TEST(Outputs, GapKindOnlyAffectsExport) {
  PipelineConfig config;
  config.gap_kind = GapKind::Squared;
  const auto r = run_pipeline(canonical_tree(), testing::case_study_acd3(), testing::case_study_job(), config);
  EXPECT_EQ(r.exported_gaps.kind, GapKind::Squared);
  for (double v : r.exported_gaps.gaps.values()) EXPECT_GE(v, 0.0);
  EXPECT_EQ(r.partition.clusters.size(), case_study_run().partition.clusters.size());
}

TEST(Outputs, WriteIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "compgap_pipeline_test";
  std::filesystem::remove_all(dir);
  write_outputs(case_study_run(), canonical_tree(), dir / "a");
  const auto again =
      run_pipeline(canonical_tree(), testing::case_study_acd3(), testing::case_study_job(), {});
  write_outputs(again, canonical_tree(), dir / "b");
  for (const auto& entry : std::filesystem::directory_iterator(dir / "a")) {
    EXPECT_EQ(io::read_file(entry.path()), io::read_file(dir / "b" / entry.path().filename()))
        << entry.path().filename();
  }
  std::filesystem::remove_all(dir);
}

TEST(Outputs, SingleCandidateStatsLeaveSdEmpty) {
  const auto& tree = canonical_tree();
  const auto one = testing::case_study_acd3().select_rows(std::vector<std::string>{"Cnd 1"}, tree);
  const auto rows = descriptive_table(one, tree, RollupWeights::equal(tree, 2), RollupWeights::equal(tree, 1));
  const auto csv = render_stats_csv(rows, 2);
  EXPECT_NE(csv.find("\nTotal,Total,1,3.67,,3.67,3.67,3.67\n"), std::string::npos) << csv;
}

TEST(Plot, Rendering) {
  std::vector<PlotPoint> one = {{{"only", 0, 0, 0, 0}, 1}};
  const auto svg = render_qs_plot(one);
  EXPECT_NE(svg.find("width=\"800\" height=\"600\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find("#1b9e77"), std::string::npos);
  EXPECT_EQ(code_of([] { render_qs_plot({}); }), ErrorCode::EmptyPointSet);

  std::vector<PlotPoint> escaped = {{{"a<b&c", 0.5, -0.1, 0, 0}, 2}};
  EXPECT_NE(render_qs_plot(escaped).find("a&lt;b&amp;c"), std::string::npos);

  const auto& r = case_study_run();
  const std::string full = render_outputs(r, canonical_tree()).back().second;
  std::size_t circles = 0;
  for (std::size_t pos = full.find("<circle"); pos != std::string::npos; pos = full.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, 11u);
  // Cnd 4 and Cnd 10 lie clearly above the diagonal; Cnd 1 and Cnd 5 sit just above it.
  for (const auto& p : r.points) {
    const bool above = p.soq + p.suq > 0;
    EXPECT_EQ(above, p.candidate == "Cnd 4" || p.candidate == "Cnd 10" || p.candidate == "Cnd 1" ||
                         p.candidate == "Cnd 5")
        << p.candidate;
  }
  const auto deepest = std::min_element(r.points.begin(), r.points.end(),
                                        [](const auto& a, const auto& b) { return a.suq < b.suq; });
  EXPECT_EQ(deepest->candidate, "Cnd 6");
}

}  // namespace
}  // namespace compgap
