#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "compgap/assessment.h"
#include "compgap/competence_tree.h"
#include "compgap/job_profile.h"

namespace compgap::io {

// Minimal RFC 4180 reader: comma separator, optional double quotes.
// Errors: ParseError with a 1-based line number in the location.
std::vector<std::vector<std::string>> parse_csv(std::string_view text, const std::string& source = "<csv>");
std::string csv_escape(std::string_view field);

// Errors: IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Tree file: JSON array of {"id", "name", "parent"} with parent null for roots.
std::vector<CompetenceNode> parse_tree_json(std::string_view text, const std::string& source = "<tree>");
CompetenceTree load_tree(const std::filesystem::path& path);
std::string tree_to_json(const CompetenceTree& tree);

// Job file: {"job_id", "f", "rcd3": {leaf: number|term}, "hcv1": {id: number},
// "hcv2": {id: number}, "eligibility": [{"competence", "min_score", "description"}]}.
JobProfile parse_job_json(std::string_view text, const CompetenceTree& tree, const std::string& source = "<job>");
JobProfile load_job(const std::filesystem::path& path, const CompetenceTree& tree);

// ACD file: header "competence,<candidate>...", one row per leaf id.
AcdMatrix parse_acd_csv(std::string_view text, const CompetenceTree& tree, const std::string& source = "<acd>");
AcdMatrix load_acd(const std::filesystem::path& path, const CompetenceTree& tree);

// Long-form responses with header
// assessee,assessment_type,assessor_role,competence,statement_id,value,weight.
std::vector<StatementResponse> parse_responses_csv(std::string_view text, const std::string& source = "<responses>");
std::vector<StatementResponse> load_responses(const std::filesystem::path& path);

}  // namespace compgap::io
