#include <random>

#include <benchmark/benchmark.h>

#include "compgap/distributions.h"
#include "compgap/pipeline.h"
#include "compgap/scott_knott.h"
#include "fixtures.h"

namespace {

using namespace compgap;

void BM_CaseStudyPipeline(benchmark::State& state) {
  const auto& tree = testing::canonical_tree();
  const auto acd = testing::case_study_acd3();
  const auto job = testing::case_study_job();
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(tree, acd, job, {}));
}
BENCHMARK(BM_CaseStudyPipeline);

void BM_RenderOutputs(benchmark::State& state) {
  const auto& tree = testing::canonical_tree();
  const auto r = run_pipeline(tree, testing::case_study_acd3(), testing::case_study_job(), {});
  for (auto _ : state) benchmark::DoNotOptimize(render_outputs(r, tree));
}
BENCHMARK(BM_RenderOutputs);

// Larger candidate pools drawn at random around the required profile.
void BM_PipelineCandidates(benchmark::State& state) {
  const auto& tree = testing::canonical_tree();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> score(1, 5);
  std::vector<std::string> names;
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("P" + std::to_string(i));
    for (int j = 0; j < 48; ++j) values.push_back(score(rng));
  }
  const AcdMatrix acd(3, ScoreMatrix(names, tree.leaves(), values), tree);
  const auto job = testing::case_study_job();
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(tree, acd, job, {}));
}
BENCHMARK(BM_PipelineCandidates)->Arg(10)->Arg(100)->Arg(1000);

void BM_ScottKnott(benchmark::State& state) {
  std::mt19937 rng(2);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<CandidateMean> means;
  for (int i = 0; i < state.range(0); ++i) means.push_back({"T" + std::to_string(i), noise(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(scott_knott(means, 0.05, 12, 0.05));
}
BENCHMARK(BM_ScottKnott)->Arg(11)->Arg(100)->Arg(1000);

void BM_ChiSquaredCritical(benchmark::State& state) {
  int nu = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist::chi_squared_critical(nu, 0.05));
    nu = nu % 200 + 1;
  }
}
BENCHMARK(BM_ChiSquaredCritical);

}  // namespace

BENCHMARK_MAIN();
