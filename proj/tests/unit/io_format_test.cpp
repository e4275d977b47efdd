#include <gtest/gtest.h>

#include "compgap/format.h"
#include "compgap/io.h"
#include "expect_error.h"
#include "fixtures.h"

namespace compgap {
namespace {

using testing::canonical_tree;
using testing::code_of;

TEST(Format, FixedPoint) {
  EXPECT_EQ(format_fixed(3.375, 2), "3.38");
  EXPECT_EQ(format_fixed(0.2625, 2), "0.26");
  EXPECT_EQ(format_fixed(-0.001, 2), "0.00");
  EXPECT_EQ(format_fixed(-0.0, 2), "0.00");
  EXPECT_EQ(format_fixed(-0.2011, 2), "-0.20");
  EXPECT_EQ(format_fixed(2.0, 0), "2");
  // Exact binary ties go to even.
  EXPECT_EQ(format_fixed(3.625, 2), "3.62");
  EXPECT_EQ(format_fixed(0.125, 2), "0.12");
  EXPECT_EQ(format_exact(0.1), "0.1");
}

TEST(Csv, Parsing) {
  const auto rows = io::parse_csv("\xEF\xBB\xBF" "a,\"b,c\",\"d\"\"e\"\r\n1,2,3\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "a");
  EXPECT_EQ(rows[0][1], "b,c");
  EXPECT_EQ(rows[0][2], "d\"e");
  EXPECT_EQ(rows[1][2], "3");
  EXPECT_EQ(code_of([] { io::parse_csv("a,\"b\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(io::csv_escape("x,y"), "\"x,y\"");
  EXPECT_EQ(io::csv_escape("Cnd 4"), "Cnd 4");
}

std::string acd_text(const std::string& skip = "") {
  std::string out = "competence,A,B\n";
  for (const auto& leaf : canonical_tree().leaves()) {
    if (leaf.str() == skip) continue;
    out += leaf.str() + ",3,4\n";
  }
  return out;
}

TEST(AcdCsv, Loading) {
  const auto acd = io::parse_acd_csv(acd_text(), canonical_tree());
  EXPECT_EQ(acd.rows(), 2u);
  EXPECT_EQ(acd.at(1, 47), 4.0);
  EXPECT_EQ(code_of([] { io::parse_acd_csv(acd_text("C3.4.4"), canonical_tree()); }), ErrorCode::IncompleteMatrix);

  auto bad = acd_text();
  bad.replace(bad.find(",3,4"), 4, ",7,4");
  try {
    io::parse_acd_csv(bad, canonical_tree(), "acd.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScoreOutOfRange);
    EXPECT_EQ(e.location(), "acd.csv:2");
  }
  EXPECT_EQ(code_of([] { io::parse_acd_csv("competence,A\nC9.1.1,3\n", canonical_tree()); }), ErrorCode::UnknownId);
  EXPECT_EQ(code_of([] { io::parse_acd_csv("competence,A\nC1.1,3\n", canonical_tree()); }),
            ErrorCode::LevelMismatch);
}

TEST(TreeJson, RoundTrip) {
  const auto text = io::tree_to_json(canonical_tree());
  const auto again = CompetenceTree::build(io::parse_tree_json(text));
  EXPECT_EQ(again.leaves(), canonical_tree().leaves());
  EXPECT_EQ(again.node(testing::id("C1.1.1")).name, canonical_tree().node(testing::id("C1.1.1")).name);
  EXPECT_EQ(code_of([] { io::parse_tree_json("{\"id\": 1}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_tree_json("[{\"id\": \"C1\",}]"); }), ErrorCode::ParseError);
}

TEST(JobJson, AllocationDiagnostics) {
  std::string job = R"({"job_id": "x", "rcd3": {)";
  bool first = true;
  for (const auto& leaf : canonical_tree().leaves()) {
    job += std::string(first ? "" : ",") + "\"" + leaf.str() + "\": \"Important\"";
    first = false;
  }
  job += R"(}, "hcv1": {"C1": 60, "C2": 20, "C3": 20}, "hcv2": {
      "C1.1": 60, "C1.2": 10, "C1.3": 30, "C1.4": 20,
      "C2.1": 25, "C2.2": 25, "C2.3": 25, "C2.4": 25,
      "C3.1": 25, "C3.2": 25, "C3.3": 25, "C3.4": 25}})";
  EXPECT_EQ(code_of([&] { io::parse_job_json(job, canonical_tree()); }), ErrorCode::AllocationSumMismatch);
  job.replace(job.find("\"C1.1\": 60"), 10, "\"C1.1\": 40");
  const auto profile = io::parse_job_json(job, canonical_tree());
  EXPECT_EQ(profile.rcd3.at(testing::id("C2.2.2")), 4.0);
}

TEST(Responses, Loading) {
  const std::string text =
      "assessee,assessment_type,assessor_role,competence,statement_id,value,weight\n"
      "A,multi_source,manager,C1.1.1,s1,4,0.5\n"
      "A,multi_source,colleague,C1.1.1,s2,2,0.5\n";
  const auto rs = io::parse_responses_csv(text);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_DOUBLE_EQ(score_statement_set(rs), 3.0);
  EXPECT_EQ(code_of([] { io::parse_responses_csv("assessee\nA\n"); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace compgap
