// compgap: competence gap analysis from the command line.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "compgap/error.h"
#include "compgap/io.h"
#include "compgap/pipeline.h"
#include "compgap/plot.h"

namespace {

using namespace compgap;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;
constexpr int kExitIo = 3;

int exit_code_for(const Error& e) {
  switch (error_category(e.code())) {
    case ErrorCategory::Validation: return kExitValidation;
    case ErrorCategory::Computation: return kExitComputation;
    case ErrorCategory::Io: return kExitIo;
  }
  return kExitValidation;
}

void report(const Error& e) { std::cerr << "error: " << e.what() << "\n"; }

struct Inputs {
  std::string tree;
  std::string acd;
  std::string responses;
  std::string job;
};

GapKind parse_gap_kind(const std::string& text) {
  if (text == "SG") return GapKind::Simple;
  if (text == "AG") return GapKind::Absolute;
  if (text == "SQG") return GapKind::Squared;
  throw Error(ErrorCode::InvalidConfig, "gap kind must be SG, AG or SQG");
}

AcdMatrix load_scores(const Inputs& in, const CompetenceTree& tree, const PipelineConfig& config) {
  if (!in.responses.empty()) {
    const auto responses = io::load_responses(in.responses);
    try {
      return acd3_from_responses(responses, tree, config.assessment_type_weights);
    } catch (const Error& e) {
      if (!e.location().empty()) throw;
      throw e.with_location(in.responses);
    }
  }
  return io::load_acd(in.acd, tree);
}

void add_score_options(CLI::App* cmd, Inputs& in) {
  auto* acd = cmd->add_option("--acd", in.acd, "Level-3 score matrix (CSV)");
  auto* resp = cmd->add_option("--responses", in.responses, "Raw statement responses (CSV) instead of --acd");
  acd->excludes(resp);
}

// Structural checks on each input file, then a dry run so anything `run`
// would reject is reported here with the same rule name.
int cmd_validate(const Inputs& in, const PipelineConfig& config) {
  int status = kExitOk;
  auto fail = [&](const Error& e) {
    std::cout << e.what() << "\n";
    status = std::max(status, exit_code_for(e));
  };

  std::optional<CompetenceTree> tree;
  try {
    tree = io::load_tree(in.tree);
  } catch (const Error& e) {
    fail(e);
    return status;
  }

  std::optional<AcdMatrix> acd;
  try {
    acd = load_scores(in, *tree, config);
  } catch (const Error& e) {
    fail(e);
  }
  std::optional<JobProfile> job;
  try {
    job = io::load_job(in.job, *tree);
  } catch (const Error& e) {
    fail(e);
  }
  if (acd && job) {
    try {
      run_pipeline(*tree, *acd, *job, config);
    } catch (const Error& e) {
      fail(e);
    }
  }
  if (status == kExitOk) {
    std::cout << "OK: " << tree->level_ids(1).size() << "/" << tree->level_ids(2).size() << "/"
              << tree->level_ids(3).size() << " tree, " << acd->rows() << " candidates, profile valid\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competence gap analysis and candidate ranking"};
  app.require_subcommand(1);

  Inputs in;
  PipelineConfig config;
  std::string out_dir;
  std::string policy = "most_qualified";
  std::string gap_kind = "SG";
  bool to_stdout = false;
  std::string result_path;
  std::string plot_out;

  auto add_tree = [&](CLI::App* cmd) { cmd->add_option("--tree", in.tree, "Competence tree (JSON)")->required(); };
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", config.alpha, "Significance level for clustering");
    cmd->add_option("--policy", policy, "most_qualified or closest_fit");
    cmd->add_option("--gap-kind", gap_kind, "Gap matrix written to gaps.csv: SG, AG or SQG");
    cmd->add_option("--decimals", config.display_decimals, "Decimals in printed tables");
  };

  auto* validate = app.add_subcommand("validate", "Check input files and report every violation");
  add_tree(validate);
  add_score_options(validate, in);
  validate->add_option("--job", in.job, "Job profile (JSON)")->required();
  add_config(validate);

  auto* run = app.add_subcommand("run", "Run the full analysis and write all artifacts");
  add_tree(run);
  add_score_options(run, in);
  run->add_option("--job", in.job, "Job profile (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--stdout", to_stdout, "Print ranking.csv to standard output");
  add_config(run);

  auto* stats = app.add_subcommand("stats", "Descriptive statistics of level-1 and total scores");
  add_tree(stats);
  add_score_options(stats, in);
  stats->add_option("--decimals", config.display_decimals, "Decimals in printed tables");

  auto* plot = app.add_subcommand("plot", "Render the qualification-space SVG from result.json");
  plot->add_option("--result", result_path, "result.json of a previous run")->required();
  plot->add_option("--out", plot_out, "SVG file (standard output when omitted)");

  auto* weights = app.add_subcommand("weights", "Print the absolute competence weights of a job profile");
  add_tree(weights);
  weights->add_option("--job", in.job, "Job profile (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    config.policy = parse_policy(policy);
    config.gap_kind = parse_gap_kind(gap_kind);

    if (*validate) {
      if (in.acd.empty() && in.responses.empty()) throw Error(ErrorCode::InvalidConfig, "--acd or --responses is required");
      return cmd_validate(in, config);
    }

    if (*plot) {
      const std::string svg = render_qs_plot_from_result(io::read_file(result_path));
      if (plot_out.empty()) {
        std::cout << svg;
      } else {
        io::write_file(plot_out, svg);
      }
      return kExitOk;
    }

    const CompetenceTree tree = io::load_tree(in.tree);

    if (*weights) {
      const JobProfile job = io::load_job(in.job, tree);
      std::cout << render_weights_csv(absolute_weights(job.hcv, tree));
      return kExitOk;
    }

    if (in.acd.empty() && in.responses.empty()) throw Error(ErrorCode::InvalidConfig, "--acd or --responses is required");
    const AcdMatrix acd = load_scores(in, tree, config);

    if (*stats) {
      config.validate();
      const auto rows = descriptive_table(acd, tree, RollupWeights::equal(tree, 2), RollupWeights::equal(tree, 1));
      std::cout << render_stats_csv(rows, config.display_decimals);
      return kExitOk;
    }

    if (out_dir.empty() && !to_stdout) throw Error(ErrorCode::InvalidConfig, "run needs --out DIR or --stdout");
    const JobProfile job = io::load_job(in.job, tree);
    const RunResult result = run_pipeline(tree, acd, job, config);
    if (!out_dir.empty()) write_outputs(result, tree, out_dir);
    if (to_stdout) std::cout << render_ranking_csv(result);
    return kExitOk;
  } catch (const Error& e) {
    report(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
