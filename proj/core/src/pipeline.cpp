#include "compgap/pipeline.h"

#include <algorithm>
#include <cmath>
#include <system_error>

#include <json.hpp>

#include "compgap/error.h"
#include "compgap/format.h"
#include "compgap/io.h"
#include "compgap/plot.h"

namespace compgap {

namespace {

using nlohmann::json;

const char* const kRequiredLabel = "Req";

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (!e.location().empty()) throw;
    throw e.with_location(std::string("stage ") + name);
  }
}

ClusterPartition single_cluster(std::span<const CandidateMean> means) {
  ClusterPartition p;
  Cluster c;
  c.members.assign(means.begin(), means.end());
  std::sort(c.members.begin(), c.members.end(), [](const CandidateMean& a, const CandidateMean& b) {
    if (a.mean != b.mean) return a.mean > b.mean;
    return a.candidate < b.candidate;
  });
  double sum = 0.0;
  for (const auto& m : c.members) sum += m.mean;
  c.mean_of_means = sum / static_cast<double>(c.members.size());
  p.clusters.push_back(std::move(c));
  return p;
}

std::string opt_fixed(const std::optional<double>& v, int decimals) {
  return v ? format_fixed(*v, decimals) : std::string();
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(); }

// Table shape: one row per competence, one column per candidate, optional trailing Req column.
std::string render_competence_table(const ScoreMatrix& m, const ScoreMatrix* req, int decimals) {
  std::string out = "competence";
  for (const auto& c : m.candidates()) out += "," + io::csv_escape(c);
  if (req) out += std::string(",") + kRequiredLabel;
  out += "\n";
  for (std::size_t j = 0; j < m.cols(); ++j) {
    out += m.competences()[j].str();
    for (std::size_t i = 0; i < m.rows(); ++i) out += "," + format_fixed(m.at(i, j), decimals);
    if (req) out += "," + format_fixed(req->at(0, j), decimals);
    out += "\n";
  }
  return out;
}

json matrix_json(const ScoreMatrix& m) {
  json comps = json::array();
  for (const auto& id : m.competences()) comps.push_back(id.str());
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.push_back({{"candidate", m.candidates()[i]}, {"values", std::vector<double>(r.begin(), r.end())}});
  }
  return {{"competences", comps}, {"rows", rows}};
}

json stats_json(const DescriptiveStats& s) {
  return {{"N", s.n}, {"M", s.mean}, {"SD", opt_json(s.sd)}, {"Mdn", s.median}, {"min", s.min}, {"max", s.max}};
}

json factor_json(const AnovaFactor& f) {
  json out = {{"ss", f.ss}, {"df", f.df}, {"ms", f.ms}, {"f", opt_json(f.f)}, {"p", opt_json(f.p)},
              {"partial_eta_squared", opt_json(f.partial_eta_squared)}};
  out["effect_size"] =
      f.partial_eta_squared ? json(std::string(to_string(effect_size_label(*f.partial_eta_squared)))) : json();
  return out;
}

json rows_json(std::span<const RankingRow> rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"rank", r.rank},
                   {"candidate", r.candidate},
                   {"msg", r.msg},
                   {"lower", r.lower},
                   {"upper", r.upper},
                   {"cluster", r.cluster},
                   {"qualification", std::string(to_string(r.qualification))}});
  }
  return out;
}

}  // namespace

void PipelineConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidConfig, "alpha must lie in (0, 1)");
  if (display_decimals < 0 || display_decimals > 12) {
    throw Error(ErrorCode::InvalidConfig, "display decimals must be in 0..12");
  }
  if (leaf_to_level2 && leaf_to_level2->parent_level() != 2) {
    throw Error(ErrorCode::InvalidConfig, "leaf rollup weights must be keyed by level-2 parents");
  }
  if (level2_to_level1 && level2_to_level1->parent_level() != 1) {
    throw Error(ErrorCode::InvalidConfig, "level-2 rollup weights must be keyed by level-1 parents");
  }
}

std::vector<StatsRow> descriptive_table(const AcdMatrix& acd3, const CompetenceTree& tree,
                                        const RollupWeights& leaf_to_level2, const RollupWeights& level2_to_level1) {
  const auto scores = level1_scores(acd3, tree, leaf_to_level2, level2_to_level1);
  std::vector<StatsRow> rows;
  rows.push_back({"Total", "Total", describe(scores.total)});
  for (std::size_t j = 0; j < scores.level1.cols(); ++j) {
    const auto& id = scores.level1.competences()[j];
    rows.push_back({id.str(), tree.node(id).name, describe(scores.level1.scores().column(j))});
  }
  return rows;
}

RunResult run_pipeline(const CompetenceTree& tree, const AcdMatrix& acd3, const JobProfile& job,
                       const PipelineConfig& config) {
  stage("config", [&] {
    config.validate();
    return 0;
  });

  RunResult result;
  result.config = config;
  result.job_id = job.job_id;
  result.acd3 = acd3;

  const RollupWeights to_level2 =
      config.leaf_to_level2 ? *config.leaf_to_level2 : stage("rollup", [&] { return RollupWeights::equal(tree, 2); });
  const RollupWeights to_level1 = config.level2_to_level1
                                      ? *config.level2_to_level1
                                      : stage("rollup", [&] { return RollupWeights::equal(tree, 1); });

  result.eligibility = stage("eligibility", [&] {
    auto report = filter_eligible(acd3, tree, job.eligibility, to_level2, to_level1);
    if (report.eligible.empty()) throw Error(ErrorCode::EmptyInput, "no candidate passes the eligibility rules");
    return report;
  });

  stage("rollup", [&] {
    const AcdMatrix eligible = acd3.select_rows(result.eligibility.eligible, tree);
    auto scores = level1_scores(eligible, tree, to_level2, to_level1);
    result.acd2 = std::move(scores.level2);
    result.acd1 = std::move(scores.level1);
    result.total = std::move(scores.total);

    const AcdMatrix rcd3(3, ScoreMatrix({kRequiredLabel}, tree.leaves(), job.rcd3_in_tree_order(tree)), tree);
    result.rcd2 = rollup(rcd3, to_level2, tree).scores();
    return 0;
  });

  result.stats = stage("statistics", [&] {
    const AcdMatrix eligible = acd3.select_rows(result.eligibility.eligible, tree);
    return descriptive_table(eligible, tree, to_level2, to_level1);
  });

  stage("prioritization", [&] {
    result.weights = absolute_weights(job.hcv, tree);
    result.weighted_acd = apply_weights(result.acd2.scores(), result.weights);
    result.weighted_rcd = apply_weights(result.rcd2, result.weights);
    return 0;
  });

  stage("gaps", [&] {
    result.gaps = gap_scores(result.weighted_acd, result.weighted_rcd, GapKind::Simple);
    result.exported_gaps = config.gap_kind == GapKind::Simple
                               ? result.gaps
                               : gap_scores(result.weighted_acd, result.weighted_rcd, config.gap_kind);
    result.points = qualification_points(result.gaps);
    return 0;
  });

  std::vector<CandidateMean> means;
  for (const auto& p : result.points) means.push_back({p.candidate, p.msg});

  if (means.size() >= 2) {
    result.anova = stage("anova", [&] { return rcbd_anova(result.gaps); });
  }

  result.partition = stage("clustering", [&] {
    if (!result.anova) return single_cluster(means);
    if (result.anova->degenerate()) {
      // Nothing to split when every mean coincides; otherwise the test is undefined.
      const auto [lo, hi] = std::minmax_element(means.begin(), means.end(), [](const auto& a, const auto& b) {
        return a.mean < b.mean;
      });
      if (lo->mean == hi->mean) return single_cluster(means);
      throw Error(ErrorCode::DegenerateVariance, "error mean square is zero; the clustering test is undefined");
    }
    return scott_knott(means, result.anova->s2(), static_cast<double>(result.gaps.gaps.cols()), config.alpha);
  });

  stage("ranking", [&] {
    result.ranking = rank_and_label(result.partition, result.points, result.gaps);
    result.recommendation = apply_policy(result.ranking, config.policy);
    return 0;
  });
  return result;
}

std::string render_ranking_csv(const RunResult& result) {
  const int d = result.config.display_decimals;
  std::string out = "rank,candidate,msg,lower,upper,cluster,qualification\n";
  for (const auto& r : result.recommendation) {
    out += std::to_string(r.rank) + "," + io::csv_escape(r.candidate) + "," + format_fixed(r.msg, d) + "," +
           format_fixed(r.lower, d) + "," + format_fixed(r.upper, d) + "," + std::to_string(r.cluster) + "," +
           std::string(to_string(r.qualification)) + "\n";
  }
  return out;
}

std::string render_stats_csv(std::span<const StatsRow> rows, int decimals) {
  std::string out = "competence,name,N,M,SD,Mdn,min,max\n";
  for (const auto& r : rows) {
    const auto& s = r.stats;
    out += io::csv_escape(r.label) + "," + io::csv_escape(r.name) + "," + std::to_string(s.n) + "," +
           format_fixed(s.mean, decimals) + "," + opt_fixed(s.sd, decimals) + "," + format_fixed(s.median, decimals) +
           "," + format_fixed(s.min, decimals) + "," + format_fixed(s.max, decimals) + "\n";
  }
  return out;
}

std::string render_weights_csv(const WeightScheme& weights) {
  std::string out = "id,weight\n";
  for (const auto& [id, w] : weights.entries()) out += id.str() + "," + format_exact(w) + "\n";
  return out;
}

namespace {

std::string render_level1_csv(const RunResult& r, int d) {
  std::string out = "candidate,Total";
  for (const auto& id : r.acd1.competences()) out += "," + id.str();
  out += "\n";
  for (std::size_t i = 0; i < r.acd1.rows(); ++i) {
    out += io::csv_escape(r.acd1.candidates()[i]) + "," + format_fixed(r.total[i], d);
    for (std::size_t j = 0; j < r.acd1.cols(); ++j) out += "," + format_fixed(r.acd1.at(i, j), d);
    out += "\n";
  }
  return out;
}

std::string render_points_csv(const RunResult& r, int d) {
  std::string out = "candidate,SOQ,SUQ,MSG,MAG,side\n";
  for (const auto& p : r.points) {
    out += io::csv_escape(p.candidate) + "," + format_fixed(p.soq, d) + "," + format_fixed(p.suq, d) + "," +
           format_fixed(p.msg, d) + "," + format_fixed(p.mag, d) + "," +
           std::string(to_string(qs_geometry(p).side)) + "\n";
  }
  return out;
}

std::string p_value(const std::optional<double>& p) {
  if (!p) return {};
  return *p < 0.001 ? "<0.001" : format_fixed(*p, 4);
}

// Sums of squares are tiny on the weighted-gap scale, so they keep six
// decimals regardless of the display setting.
std::string render_anova_csv(const RunResult& r) {
  std::string out = "factor,ss,df,ms,f,p,partial_eta_squared\n";
  if (!r.anova) return out;
  const auto& a = *r.anova;
  auto factor_row = [&](const char* name, const AnovaFactor& f) {
    return std::string(name) + "," + format_fixed(f.ss, 6) + "," + std::to_string(f.df) + "," + format_fixed(f.ms, 6) +
           "," + opt_fixed(f.f, 3) + "," + p_value(f.p) + "," + opt_fixed(f.partial_eta_squared, 3) + "\n";
  };
  out += factor_row("candidates", a.treatments);
  out += factor_row("blocks", a.blocks);
  out += "error," + format_fixed(a.ss_error, 6) + "," + std::to_string(a.df_error) + "," + format_fixed(a.ms_error, 6) +
         ",,,\n";
  out += "total," + format_fixed(a.ss_total, 6) + "," +
         std::to_string(a.treatments.df + a.blocks.df + a.df_error) + ",,,,\n";
  return out;
}

std::vector<PlotPoint> plot_points(const RunResult& r) {
  std::vector<PlotPoint> out;
  for (const auto& p : r.points) out.push_back({p, r.partition.cluster_of(p.candidate)});
  return out;
}

}  // namespace

std::string render_result_json(const RunResult& r, const CompetenceTree& tree) {
  json doc;
  doc["job_id"] = r.job_id;
  doc["config"] = {{"alpha", r.config.alpha},
                   {"gap_kind", std::string(to_string(r.config.gap_kind))},
                   {"policy", std::string(to_string(r.config.policy))},
                   {"display_decimals", r.config.display_decimals}};
  doc["candidates"] = {{"all", r.acd3.candidates()}, {"eligible", r.eligibility.eligible}};
  json excl = json::array();
  for (const auto& e : r.eligibility.exclusions) {
    excl.push_back({{"candidate", e.candidate},
                    {"competence", e.rule.competence.str()},
                    {"min_score", e.rule.min_score},
                    {"score", e.score},
                    {"description", e.rule.description}});
  }
  doc["exclusions"] = excl;
  doc["acd_level3"] = matrix_json(r.acd3.scores());
  doc["acd_level2"] = matrix_json(r.acd2.scores());
  doc["rcd_level2"] = matrix_json(r.rcd2);
  doc["acd_level1"] = matrix_json(r.acd1.scores());
  doc["total"] = r.total;
  json stats = json::array();
  for (const auto& s : r.stats) {
    json row = stats_json(s.stats);
    row["competence"] = s.label;
    row["name"] = s.name;
    stats.push_back(row);
  }
  doc["stats"] = stats;
  json weights = json::array();
  for (const auto& [id, w] : r.weights.entries()) weights.push_back({{"id", id.str()}, {"weight", w}});
  doc["weights"] = weights;
  doc["weighted_acd"] = matrix_json(r.weighted_acd);
  doc["weighted_rcd"] = matrix_json(r.weighted_rcd);
  doc["gaps"] = matrix_json(r.gaps.gaps);
  doc["gaps"]["kind"] = std::string(to_string(r.gaps.kind));
  json points = json::array();
  for (const auto& p : r.points) {
    const auto geo = qs_geometry(p);
    points.push_back({{"candidate", p.candidate},
                      {"soq", p.soq},
                      {"suq", p.suq},
                      {"msg", p.msg},
                      {"mag", p.mag},
                      {"segment", geo.segment},
                      {"manhattan", geo.manhattan},
                      {"side", std::string(to_string(geo.side))},
                      {"cluster", r.partition.cluster_of(p.candidate)}});
  }
  doc["qs_points"] = points;
  if (r.anova) {
    const auto& a = *r.anova;
    doc["anova"] = {{"candidates", factor_json(a.treatments)},
                    {"blocks", factor_json(a.blocks)},
                    {"error", {{"ss", a.ss_error}, {"df", a.df_error}, {"ms", a.ms_error}}},
                    {"ss_total", a.ss_total},
                    {"s2", a.s2()}};
  } else {
    doc["anova"] = nullptr;
  }
  json clusters = json::array();
  for (std::size_t i = 0; i < r.partition.clusters.size(); ++i) {
    const auto& c = r.partition.clusters[i];
    json members = json::array();
    for (const auto& m : c.members) members.push_back(m.candidate);
    clusters.push_back({{"index", i + 1}, {"members", members}, {"mean", c.mean_of_means}});
  }
  doc["clusters"] = clusters;
  json trace = json::array();
  for (const auto& t : r.partition.trace) {
    trace.push_back({{"group", t.group},
                     {"split_index", t.split_index},
                     {"bg_ss", t.bg_ss},
                     {"lambda", t.lambda},
                     {"nu", t.nu},
                     {"critical", t.critical},
                     {"split", t.split}});
  }
  doc["sk_trace"] = trace;
  doc["ranking"] = rows_json(r.ranking);
  doc["recommendation"] = rows_json(r.recommendation);
  (void)tree;
  return doc.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> render_outputs(const RunResult& r, const CompetenceTree& tree) {
  const int d = r.config.display_decimals;
  const auto points = plot_points(r);
  return {
      {"acd_level2.csv", render_competence_table(r.acd2.scores(), &r.rcd2, d)},
      {"acd_level1.csv", render_level1_csv(r, d)},
      {"stats.csv", render_stats_csv(r.stats, d)},
      {"weights.csv", render_weights_csv(r.weights)},
      {"weighted.csv", render_competence_table(r.weighted_acd, &r.weighted_rcd, d)},
      {"gaps.csv", render_competence_table(r.exported_gaps.gaps, nullptr, d)},
      {"qs_points.csv", render_points_csv(r, d)},
      {"anova.csv", render_anova_csv(r)},
      {"ranking.csv", render_ranking_csv(r)},
      {"result.json", render_result_json(r, tree)},
      {"qs_plot.svg", render_qs_plot(points)},
  };
}

void write_outputs(const RunResult& result, const CompetenceTree& tree, const std::filesystem::path& dir) {
  // Render everything first so a computation error leaves no partial directory.
  const auto files = render_outputs(result, tree);
  std::error_code ec;
  const bool created = std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  try {
    for (const auto& [name, content] : files) {
      const auto path = dir / name;
      io::write_file(path, content);
      written.push_back(path);
    }
  } catch (...) {
    for (const auto& p : written) std::filesystem::remove(p, ec);
    if (created) std::filesystem::remove(dir, ec);
    throw;
  }
}

}  // namespace compgap
