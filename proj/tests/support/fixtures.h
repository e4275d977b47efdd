#pragma once

#include <map>
#include <string>
#include <vector>

#include "case_study.h"
#include "compgap/assessment.h"
#include "compgap/competence_tree.h"
#include "compgap/job_profile.h"
#include "compgap/score_matrix.h"

namespace compgap::testing {

inline CompetenceId id(std::string_view text) { return CompetenceId::parse(text); }

inline const CompetenceTree& canonical_tree() {
  static const CompetenceTree tree = CompetenceTree::build(canonical_pis_nodes());
  return tree;
}

inline std::vector<std::string> case_study_candidates() {
  std::vector<std::string> out;
  for (int i = 1; i <= case_study::kCandidates; ++i) out.push_back("Cnd " + std::to_string(i));
  return out;
}

inline AcdMatrix case_study_acd3(const CompetenceTree& tree = canonical_tree()) {
  const auto cands = case_study_candidates();
  std::vector<double> values;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    for (int leaf = 0; leaf < 48; ++leaf) values.push_back(case_study::kLevel3[leaf][c]);
  }
  return AcdMatrix(3, ScoreMatrix(cands, tree.leaves(), values), tree);
}

// 40/35/25 over the roots; (30,30,20,20), (30,20,20,30), (30,30,20,20) within.
inline HcvAllocation case_study_hcv() {
  HcvAllocation a;
  a.level1 = {{id("C1"), 40}, {id("C2"), 35}, {id("C3"), 25}};
  const double groups[3][4] = {{30, 30, 20, 20}, {30, 20, 20, 30}, {30, 30, 20, 20}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      a.level2[id("C" + std::to_string(i + 1) + "." + std::to_string(j + 1))] = groups[i][j];
    }
  }
  return a;
}

inline JobProfile case_study_job(const CompetenceTree& tree = canonical_tree(),
                                 std::vector<EligibilityRule> rules = {}) {
  std::map<CompetenceId, RcdEntry> rcd;
  const auto& leaves = tree.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) rcd[leaves[i]] = case_study::kLevel3[i][11];
  return build_job_profile(tree, "case-study", rcd, case_study_hcv(), std::move(rules));
}

}  // namespace compgap::testing
