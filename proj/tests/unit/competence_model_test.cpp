#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "compgap/error.h"
#include "expect_error.h"
#include "fixtures.h"

namespace compgap {
namespace {

using testing::canonical_tree;
using testing::code_of;
using testing::id;

TEST(CompetenceId, ParsesCanonicalForms) {
  EXPECT_EQ(id("C1").level(), 1);
  EXPECT_EQ(id("C3.4").level(), 2);
  EXPECT_EQ(id("C3.4.4").level(), 3);
  const auto path = id("C12.10.3").path();
  EXPECT_EQ(std::vector<int>(path.begin(), path.end()), (std::vector<int>{12, 10, 3}));
  EXPECT_EQ(id("C3.4.4").prefix_parent()->str(), "C3.4");
  EXPECT_FALSE(id("C2").prefix_parent().has_value());
}

TEST(CompetenceId, RejectsMalformed) {
  for (const char* bad : {"", "C", "C0", "C01", "c1", "C1.", "C1..2", "C1.x", "1.2", "C1.2.-3", " C1"}) {
    EXPECT_EQ(code_of([&] { CompetenceId::parse(bad); }), ErrorCode::InvalidId) << bad;
  }
}

TEST(CompetenceId, OrdersNumerically) {
  EXPECT_LT(id("C1.2"), id("C1.10"));
  EXPECT_LT(id("C1"), id("C1.1"));
  EXPECT_LT(id("C2.4.4"), id("C3"));
}

TEST(CompetenceTree, CanonicalShape) {
  const auto& tree = canonical_tree();
  EXPECT_EQ(tree.level_ids(1).size(), 3u);
  EXPECT_EQ(tree.level_ids(2).size(), 12u);
  EXPECT_EQ(tree.level_ids(3).size(), 48u);
  EXPECT_EQ(tree.leaves().front().str(), "C1.1.1");
  EXPECT_EQ(tree.leaves().back().str(), "C3.4.4");
}

TEST(CompetenceTree, SingleChainIsValid) {
  const auto tree = CompetenceTree::build({{id("C1"), "a", std::nullopt, 1},
                                           {id("C1.1"), "b", id("C1"), 2},
                                           {id("C1.1.1"), "c", id("C1.1"), 3}});
  EXPECT_EQ(tree.leaves().size(), 1u);
}

TEST(CompetenceTree, StructuralErrors) {
  EXPECT_EQ(code_of([] {
              CompetenceTree::build({{id("C1"), "", std::nullopt, 1},
                                     {id("C1.1"), "", id("C1"), 2},
                                     {id("C1.1.1"), "", id("C9"), 3}});
            }),
            ErrorCode::MissingParent);
  EXPECT_EQ(code_of([] {
              CompetenceTree::build({{id("C1"), "", std::nullopt, 1},
                                     {id("C1.1"), "", id("C1"), 2},
                                     {id("C1.1"), "", id("C1"), 2},
                                     {id("C1.1.1"), "", id("C1.1"), 3}});
            }),
            ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([] {
              CompetenceTree::build({{id("C1"), "", std::nullopt, 1},
                                     {id("C1.1"), "", id("C1"), 2},
                                     {id("C1.1.1"), "", id("C1.1"), 3},
                                     {id("C1.1.1.1"), "", id("C1.1.1"), 4}});
            }),
            ErrorCode::DepthViolation);
  EXPECT_EQ(code_of([] {
              CompetenceTree::build({{id("C1"), "", std::nullopt, 1}, {id("C1.1"), "", id("C1"), 2}});
            }),
            ErrorCode::OrphanInternal);
  EXPECT_EQ(code_of([] {
              CompetenceTree::build({{id("C1"), "", std::nullopt, 1},
                                     {id("C2"), "", std::nullopt, 1},
                                     {id("C1.1"), "", id("C2"), 2},
                                     {id("C2.1"), "", id("C2"), 2},
                                     {id("C1.1.1"), "", id("C1.1"), 3},
                                     {id("C2.1.1"), "", id("C2.1"), 3}});
            }),
            ErrorCode::InvalidId);
  EXPECT_EQ(code_of([] { CompetenceTree::build({}); }), ErrorCode::EmptyInput);
}

TEST(CompetenceTree, Queries) {
  const auto& tree = canonical_tree();
  const auto c1 = tree.query(id("C1"));
  ASSERT_EQ(c1.children.size(), 4u);
  EXPECT_EQ(c1.children[0].str(), "C1.1");
  EXPECT_EQ(c1.children[3].str(), "C1.4");
  EXPECT_EQ(c1.leaf_descendants.size(), 16u);

  const auto leaf = tree.query(id("C3.4.4"));
  EXPECT_TRUE(leaf.children.empty());
  EXPECT_EQ(leaf.node->parent->str(), "C3.4");
  EXPECT_EQ(code_of([&] { tree.query(id("C7")); }), ErrorCode::UnknownId);
  EXPECT_EQ(tree.ancestor_at(id("C2.3.1"), 1).str(), "C2");
}

// Every leaf is reachable from exactly one root and ids extend their parent's.
TEST(CompetenceTree, PartitionProperty) {
  const auto& tree = canonical_tree();
  std::size_t total = 0;
  for (const auto& root : tree.level_ids(1)) total += tree.leaf_descendants(root).size();
  EXPECT_EQ(total, tree.leaves().size());
  for (const auto& leaf : tree.leaves()) {
    EXPECT_EQ(*leaf.prefix_parent(), *tree.node(leaf).parent);
  }
}

TEST(CompetenceTree, OrderInsensitiveProperty) {
  const auto& ref = canonical_tree();
  auto nodes = canonical_pis_nodes();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(nodes.begin(), nodes.end(), rng);
    const auto tree = CompetenceTree::build(nodes);
    for (int level = 1; level <= 3; ++level) EXPECT_EQ(tree.level_ids(level), ref.level_ids(level));
    for (const auto& p : ref.level_ids(2)) {
      const auto a = tree.children(p);
      const auto b = ref.children(p);
      EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
}

TEST(Importance, TermMapping) {
  EXPECT_EQ(importance_to_score("Very Important"), 5);
  EXPECT_EQ(importance_to_score("important"), 4);
  EXPECT_EQ(importance_to_score("Moderately  Important"), 3);
  EXPECT_EQ(importance_to_score(" Of Little Importance "), 2);
  EXPECT_EQ(importance_to_score("Unimportant"), 1);
  EXPECT_EQ(code_of([] { importance_to_score("Critical"); }), ErrorCode::UnknownTerm);
  for (int s = 1; s <= 5; ++s) EXPECT_EQ(importance_to_score(score_to_importance(s)), s);
}

TEST(JobProfile, CaseStudyIsValid) {
  const auto job = testing::case_study_job();
  EXPECT_EQ(job.rcd3.size(), 48u);
  EXPECT_EQ(job.rcd3.at(id("C1.1.1")), 5.0);
}

TEST(JobProfile, AllocationRules) {
  const auto& tree = canonical_tree();
  auto alloc = testing::case_study_hcv();
  alloc.level1 = {{id("C1"), 60}, {id("C2"), 20}, {id("C3"), 20}};
  EXPECT_NO_THROW(validate_allocation(alloc, tree));

  auto bad = alloc;
  bad.level2[id("C1.1")] = 60;
  bad.level2[id("C1.2")] = 10;
  bad.level2[id("C1.3")] = 30;
  bad.level2[id("C1.4")] = 20;
  EXPECT_EQ(code_of([&] { validate_allocation(bad, tree); }), ErrorCode::AllocationSumMismatch);

  auto negative = alloc;
  negative.level1 = {{id("C1"), 120}, {id("C2"), -20}, {id("C3"), 0}};
  EXPECT_EQ(code_of([&] { validate_allocation(negative, tree); }), ErrorCode::AllocationOutOfRange);

  auto missing = alloc;
  missing.level2.erase(id("C3.4"));
  EXPECT_EQ(code_of([&] { validate_allocation(missing, tree); }), ErrorCode::WeightCoverageGap);
}

TEST(JobProfile, RcdErrors) {
  const auto& tree = canonical_tree();
  std::map<CompetenceId, RcdEntry> rcd;
  for (const auto& leaf : tree.leaves()) rcd[leaf] = 3.0;
  EXPECT_NO_THROW(build_job_profile(tree, "j", rcd, testing::case_study_hcv(), {}));

  auto terms = rcd;
  terms[id("C1.1.1")] = std::string("Very Important");
  EXPECT_EQ(build_job_profile(tree, "j", terms, testing::case_study_hcv(), {}).rcd3.at(id("C1.1.1")), 5.0);

  auto incomplete = rcd;
  incomplete.erase(id("C3.4.4"));
  EXPECT_EQ(code_of([&] { build_job_profile(tree, "j", incomplete, testing::case_study_hcv(), {}); }),
            ErrorCode::IncompleteRcd);

  auto range = rcd;
  range[id("C2.2.2")] = 6.0;
  EXPECT_EQ(code_of([&] { build_job_profile(tree, "j", range, testing::case_study_hcv(), {}); }),
            ErrorCode::ScoreOutOfRange);

  auto term = rcd;
  term[id("C2.2.2")] = std::string("Critical");
  EXPECT_EQ(code_of([&] { build_job_profile(tree, "j", term, testing::case_study_hcv(), {}); }),
            ErrorCode::UnknownTerm);

  EXPECT_EQ(code_of([&] {
              build_job_profile(tree, "j", rcd, testing::case_study_hcv(), {{id("C9.1"), 2.0, ""}});
            }),
            ErrorCode::UnknownCompetenceInRule);
}

}  // namespace
}  // namespace compgap
