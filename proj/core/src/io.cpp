#include "compgap/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "compgap/error.h"

namespace compgap::io {

namespace {

using nlohmann::json;

std::string at_line(const std::string& source, std::size_t line) { return source + ":" + std::to_string(line); }

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON", at_line(source, line_of_offset(text, e.byte)));
  }
}

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

CompetenceId parse_id_at(const std::string& text, const std::string& location) {
  try {
    return CompetenceId::parse(text);
  } catch (const Error& e) {
    throw e.with_location(location);
  }
}

// Re-throws library errors with a location prefix.
template <typename Fn>
auto located(const std::string& location, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (!e.location().empty()) throw;
    throw e.with_location(location);
  }
}

std::map<CompetenceId, double> parse_amounts(const json& obj, const std::string& key, const std::string& source) {
  std::map<CompetenceId, double> out;
  if (!obj.contains(key)) return out;
  const auto& section = obj.at(key);
  if (!section.is_object()) throw Error(ErrorCode::ParseError, "'" + key + "' must be an object", source);
  for (const auto& [id, value] : section.items()) {
    if (!value.is_number()) {
      throw Error(ErrorCode::ParseError, "'" + key + "." + id + "' must be a number", source);
    }
    out[parse_id_at(id, source + ": " + key)] = value.get<double>();
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(std::string_view text, const std::string& source) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  std::size_t line = 1;
  std::size_t quote_line = 0;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };

  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty() || field_quoted) {
          throw Error(ErrorCode::ParseError, "unexpected quote inside field", at_line(source, line));
        }
        in_quotes = true;
        field_quoted = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (field_quoted) {
          throw Error(ErrorCode::ParseError, "text after closing quote", at_line(source, line));
        }
        field.push_back(ch);
    }
  }
  if (in_quotes) throw Error(ErrorCode::ParseError, "unterminated quoted field", at_line(source, quote_line));
  if (!field.empty() || !row.empty() || field_quoted) end_row();
  return rows;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

std::vector<CompetenceNode> parse_tree_json(std::string_view text, const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "tree file must be a JSON array", source);
  std::vector<CompetenceNode> nodes;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string where = source + ": node " + std::to_string(i);
    if (!item.is_object() || !item.contains("id") || !item.at("id").is_string()) {
      throw Error(ErrorCode::ParseError, "node needs a string \"id\"", where);
    }
    CompetenceNode node;
    node.id = parse_id_at(item.at("id").get<std::string>(), where);
    if (item.contains("name")) {
      if (!item.at("name").is_string()) throw Error(ErrorCode::ParseError, "\"name\" must be a string", where);
      node.name = item.at("name").get<std::string>();
    }
    if (item.contains("parent") && !item.at("parent").is_null()) {
      if (!item.at("parent").is_string()) {
        throw Error(ErrorCode::ParseError, "\"parent\" must be a string or null", where);
      }
      node.parent = parse_id_at(item.at("parent").get<std::string>(), where);
    }
    node.level = node.id.level();
    nodes.push_back(std::move(node));
  }
  return nodes;
}

CompetenceTree load_tree(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  auto nodes = parse_tree_json(text, path.string());
  return located(path.string(), [&] { return CompetenceTree::build(std::move(nodes)); });
}

std::string tree_to_json(const CompetenceTree& tree) {
  json doc = json::array();
  for (int level = 1; level <= CompetenceTree::kDepth; ++level) {
    for (const auto& id : tree.level_ids(level)) {
      const auto& n = tree.node(id);
      doc.push_back({{"id", n.id.str()}, {"name", n.name}, {"parent", n.parent ? json(n.parent->str()) : json()}});
    }
  }
  return doc.dump(2) + "\n";
}

JobProfile parse_job_json(std::string_view text, const CompetenceTree& tree, const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "job profile must be a JSON object", source);

  std::string job_id;
  if (doc.contains("job_id")) {
    if (!doc.at("job_id").is_string()) throw Error(ErrorCode::ParseError, "\"job_id\" must be a string", source);
    job_id = doc.at("job_id").get<std::string>();
  }
  HcvAllocation hcv;
  if (doc.contains("f")) {
    if (!doc.at("f").is_number()) throw Error(ErrorCode::ParseError, "\"f\" must be a number", source);
    hcv.f = doc.at("f").get<double>();
  }
  hcv.level1 = parse_amounts(doc, "hcv1", source);
  hcv.level2 = parse_amounts(doc, "hcv2", source);

  std::map<CompetenceId, RcdEntry> rcd3;
  if (doc.contains("rcd3")) {
    const auto& section = doc.at("rcd3");
    if (!section.is_object()) throw Error(ErrorCode::ParseError, "\"rcd3\" must be an object", source);
    for (const auto& [id, value] : section.items()) {
      const CompetenceId cid = parse_id_at(id, source + ": rcd3");
      if (value.is_number()) {
        rcd3[cid] = value.get<double>();
      } else if (value.is_string()) {
        rcd3[cid] = value.get<std::string>();
      } else {
        throw Error(ErrorCode::ParseError, "rcd3." + id + " must be a number or an importance term", source);
      }
    }
  }

  std::vector<EligibilityRule> rules;
  if (doc.contains("eligibility")) {
    const auto& section = doc.at("eligibility");
    if (!section.is_array()) throw Error(ErrorCode::ParseError, "\"eligibility\" must be an array", source);
    for (std::size_t i = 0; i < section.size(); ++i) {
      const auto& item = section[i];
      const std::string where = source + ": eligibility[" + std::to_string(i) + "]";
      if (!item.is_object() || !item.contains("competence") || !item.at("competence").is_string() ||
          !item.contains("min_score") || !item.at("min_score").is_number()) {
        throw Error(ErrorCode::ParseError, "rule needs \"competence\" and numeric \"min_score\"", where);
      }
      EligibilityRule rule;
      rule.competence = parse_id_at(item.at("competence").get<std::string>(), where);
      rule.min_score = item.at("min_score").get<double>();
      if (item.contains("description") && item.at("description").is_string()) {
        rule.description = item.at("description").get<std::string>();
      }
      rules.push_back(std::move(rule));
    }
  }
  return located(source, [&] {
    return build_job_profile(tree, std::move(job_id), rcd3, std::move(hcv), std::move(rules));
  });
}

JobProfile load_job(const std::filesystem::path& path, const CompetenceTree& tree) {
  return parse_job_json(read_file(path), tree, path.string());
}

AcdMatrix parse_acd_csv(std::string_view text, const CompetenceTree& tree, const std::string& source) {
  const auto rows = parse_csv(text, source);
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty ACD file", source);
  const auto& header = rows.front();
  if (header.empty() || header.front() != "competence") {
    throw Error(ErrorCode::ParseError, "first header cell must be \"competence\"", at_line(source, 1));
  }
  std::vector<std::string> candidates(header.begin() + 1, header.end());
  if (candidates.empty()) throw Error(ErrorCode::ParseError, "no candidate columns", at_line(source, 1));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].empty()) throw Error(ErrorCode::ParseError, "empty candidate name", at_line(source, 1));
    if (std::find(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(i), candidates[i]) !=
        candidates.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw Error(ErrorCode::ParseError, "duplicate candidate " + candidates[i], at_line(source, 1));
    }
  }

  // Rows may come in any order; values are re-laid out in tree leaf order.
  std::map<CompetenceId, std::vector<double>> by_leaf;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = at_line(source, r + 1);
    if (row.size() != header.size()) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(header.size()) + " fields, found " +
                                             std::to_string(row.size()), where);
    }
    const CompetenceId id = parse_id_at(row.front(), where);
    if (!tree.contains(id)) throw Error(ErrorCode::UnknownId, "competence " + id.str() + " not in tree", where);
    if (id.level() != CompetenceTree::kDepth) {
      throw Error(ErrorCode::LevelMismatch, id.str() + " is not a leaf competence", where);
    }
    if (by_leaf.count(id)) throw Error(ErrorCode::DuplicateId, "row for " + id.str() + " repeated", where);
    std::vector<double> values;
    for (std::size_t c = 1; c < row.size(); ++c) {
      double v = 0.0;
      if (row[c].find_first_not_of(" \t") == std::string::npos) {
        throw Error(ErrorCode::IncompleteMatrix, "missing score for " + candidates[c - 1] + " / " + id.str(), where);
      }
      if (!parse_double(row[c], v)) {
        throw Error(ErrorCode::ParseError, "'" + row[c] + "' is not a number", where);
      }
      if (!(v >= 1.0 && v <= 5.0)) {
        throw Error(ErrorCode::ScoreOutOfRange, "score " + row[c] + " for " + candidates[c - 1] + " outside [1, 5]",
                    where);
      }
      values.push_back(v);
    }
    by_leaf.emplace(id, std::move(values));
  }

  const auto& leaves = tree.leaves();
  std::vector<double> values(candidates.size() * leaves.size());
  for (std::size_t c = 0; c < leaves.size(); ++c) {
    auto it = by_leaf.find(leaves[c]);
    if (it == by_leaf.end()) throw Error(ErrorCode::IncompleteMatrix, "no row for competence " + leaves[c].str(), source);
    for (std::size_t r = 0; r < candidates.size(); ++r) values[r * leaves.size() + c] = it->second[r];
  }
  return located(source, [&] { return AcdMatrix(3, ScoreMatrix(candidates, leaves, std::move(values)), tree); });
}

AcdMatrix load_acd(const std::filesystem::path& path, const CompetenceTree& tree) {
  return parse_acd_csv(read_file(path), tree, path.string());
}

std::vector<StatementResponse> parse_responses_csv(std::string_view text, const std::string& source) {
  static const std::vector<std::string> kHeader = {"assessee",     "assessment_type", "assessor_role", "competence",
                                                   "statement_id", "value",           "weight"};
  const auto rows = parse_csv(text, source);
  if (rows.empty() || rows.front() != kHeader) {
    throw Error(ErrorCode::ParseError,
                "header must be assessee,assessment_type,assessor_role,competence,statement_id,value,weight",
                at_line(source, 1));
  }
  std::vector<StatementResponse> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = at_line(source, r + 1);
    if (row.size() != kHeader.size()) {
      throw Error(ErrorCode::ParseError, "expected 7 fields, found " + std::to_string(row.size()), where);
    }
    StatementResponse resp;
    resp.assessee = row[0];
    resp.assessment_type = located(where, [&] { return parse_assessment_type(row[1]); });
    resp.assessor_role = located(where, [&] { return parse_assessor_role(row[2]); });
    resp.competence = parse_id_at(row[3], where);
    resp.statement_id = row[4];
    double value = 0.0;
    if (!parse_double(row[5], value) || value != static_cast<int>(value)) {
      throw Error(ErrorCode::ParseError, "Likert value '" + row[5] + "' must be an integer", where);
    }
    resp.value = static_cast<int>(value);
    if (!parse_double(row[6], resp.weight)) {
      throw Error(ErrorCode::ParseError, "weight '" + row[6] + "' is not a number", where);
    }
    out.push_back(std::move(resp));
  }
  return out;
}

std::vector<StatementResponse> load_responses(const std::filesystem::path& path) {
  return parse_responses_csv(read_file(path), path.string());
}

}  // namespace compgap::io
