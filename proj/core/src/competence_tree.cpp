#include "compgap/competence_tree.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "compgap/error.h"

namespace compgap {

namespace {

std::optional<std::vector<int>> parse_path(std::string_view text) {
  if (text.size() < 2 || text.front() != 'C') return std::nullopt;
  std::vector<int> path;
  std::size_t pos = 1;
  while (true) {
    std::size_t end = text.find('.', pos);
    std::string_view part = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (part.empty() || part.front() == '0') return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || value < 1) return std::nullopt;
    path.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return path;
}

}  // namespace

CompetenceId CompetenceId::parse(std::string_view text) {
  auto path = parse_path(text);
  if (!path) {
    throw Error(ErrorCode::InvalidId, "'" + std::string(text) + "' is not of the form C<i>[.<j>[.<k>]]");
  }
  CompetenceId id;
  id.text_ = std::string(text);
  id.path_ = std::move(*path);
  return id;
}

bool CompetenceId::is_canonical(std::string_view text) { return parse_path(text).has_value(); }

std::optional<CompetenceId> CompetenceId::prefix_parent() const {
  if (path_.size() <= 1) return std::nullopt;
  return parse(text_.substr(0, text_.rfind('.')));
}

CompetenceTree CompetenceTree::build(std::vector<CompetenceNode> nodes) {
  if (nodes.empty()) throw Error(ErrorCode::EmptyInput, "competence node list is empty");

  std::sort(nodes.begin(), nodes.end(),
            [](const CompetenceNode& a, const CompetenceNode& b) { return a.id < b.id; });

  CompetenceTree tree;
  tree.by_level_.resize(kDepth);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& n = nodes[i];
    if (n.id.empty()) throw Error(ErrorCode::InvalidId, "node without id");
    if (!tree.index_.emplace(n.id.str(), i).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate competence id " + n.id.str());
    }
    n.level = n.id.level();
    if (n.level > kDepth) {
      throw Error(ErrorCode::DepthViolation, n.id.str() + " is deeper than level " + std::to_string(kDepth));
    }
  }

  tree.children_.resize(nodes.size());
  for (const auto& n : nodes) {
    if (n.level == 1) {
      if (n.parent) {
        throw Error(ErrorCode::DepthViolation, "level-1 node " + n.id.str() + " must not have a parent");
      }
      continue;
    }
    if (!n.parent) {
      throw Error(ErrorCode::DepthViolation, "level-" + std::to_string(n.level) + " node " + n.id.str() +
                                                 " has no parent");
    }
    auto it = tree.index_.find(n.parent->str());
    if (it == tree.index_.end()) {
      throw Error(ErrorCode::MissingParent, n.id.str() + " refers to absent parent " + n.parent->str());
    }
    const auto& parent = nodes[it->second];
    if (parent.level != n.level - 1) {
      throw Error(ErrorCode::DepthViolation, n.id.str() + " (level " + std::to_string(n.level) + ") has parent " +
                                                 parent.id.str() + " at level " + std::to_string(parent.level));
    }
    if (n.id.prefix_parent() != *n.parent) {
      throw Error(ErrorCode::InvalidId, n.id.str() + " cannot be a child of " + n.parent->str());
    }
    tree.children_[it->second].push_back(n.id);
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].level < kDepth && tree.children_[i].empty()) {
      throw Error(ErrorCode::OrphanInternal, "level-" + std::to_string(nodes[i].level) + " node " +
                                                 nodes[i].id.str() + " has no children");
    }
  }
  tree.nodes_ = std::move(nodes);

  // Tree order: roots by id, then children of each parent in id order. Nodes
  // were sorted by id so children lists are already ordered.
  for (const auto& n : tree.nodes_) {
    if (n.level == 1) tree.by_level_[0].push_back(n.id);
  }
  for (int level = 1; level < kDepth; ++level) {
    for (const auto& parent : tree.by_level_[level - 1]) {
      const auto& kids = tree.children_[tree.index_.at(parent.str())];
      tree.by_level_[level].insert(tree.by_level_[level].end(), kids.begin(), kids.end());
    }
  }
  return tree;
}

const CompetenceNode& CompetenceTree::node(const CompetenceId& id) const {
  auto it = index_.find(id.str());
  if (it == index_.end()) throw Error(ErrorCode::UnknownId, "unknown competence id " + id.str());
  return nodes_[it->second];
}

std::span<const CompetenceId> CompetenceTree::children(const CompetenceId& id) const {
  auto it = index_.find(id.str());
  if (it == index_.end()) throw Error(ErrorCode::UnknownId, "unknown competence id " + id.str());
  return children_[it->second];
}

NodeView CompetenceTree::query(const CompetenceId& id) const {
  NodeView view;
  view.node = &node(id);
  view.children = children(id);
  view.leaf_descendants = leaf_descendants(id);
  return view;
}

const std::vector<CompetenceId>& CompetenceTree::level_ids(int level) const {
  if (level < 1 || level > kDepth) {
    throw Error(ErrorCode::LevelMismatch, "level must be 1.." + std::to_string(kDepth));
  }
  return by_level_[level - 1];
}

std::vector<CompetenceId> CompetenceTree::leaf_descendants(const CompetenceId& id) const {
  std::vector<CompetenceId> out;
  std::vector<CompetenceId> frontier{id};
  while (!frontier.empty()) {
    std::vector<CompetenceId> next;
    for (const auto& c : frontier) {
      auto kids = children(c);
      if (kids.empty()) {
        out.push_back(c);
      } else {
        next.insert(next.end(), kids.begin(), kids.end());
      }
    }
    frontier = std::move(next);
  }
  return out;
}

CompetenceId CompetenceTree::ancestor_at(const CompetenceId& id, int level) const {
  const CompetenceNode* n = &node(id);
  if (level > n->level || level < 1) {
    throw Error(ErrorCode::LevelMismatch, id.str() + " has no ancestor at level " + std::to_string(level));
  }
  while (n->level > level) n = &node(*n->parent);
  return n->id;
}

std::vector<CompetenceNode> canonical_pis_nodes() {
  static const std::array<const char*, 3> kLevel1 = {"Professional Competences", "Innovative Competences",
                                                      "Social Competences"};
  static const std::array<std::array<const char*, 4>, 3> kLevel2 = {{
      {"Managerial Competences", "Business Orientation", "Job Related Skills",
       "Oral & Written Communication/ languages"},
      {"Creativity and holistic thinking", "Entrepreneurship", "Proactivity", "Readiness for changes"},
      {"Teamwork", "Professionalism", "Interpersonal skills", "Motivation for learning"},
  }};

  std::vector<CompetenceNode> nodes;
  for (int i = 1; i <= 3; ++i) {
    const std::string c1 = "C" + std::to_string(i);
    nodes.push_back({CompetenceId::parse(c1), kLevel1[i - 1], std::nullopt, 1});
    for (int j = 1; j <= 4; ++j) {
      const std::string c2 = c1 + "." + std::to_string(j);
      const std::string l2name = kLevel2[i - 1][j - 1];
      nodes.push_back({CompetenceId::parse(c2), l2name, CompetenceId::parse(c1), 2});
      for (int k = 1; k <= 4; ++k) {
        const std::string c3 = c2 + "." + std::to_string(k);
        std::string name = l2name + " / item " + std::to_string(k);
        if (c3 == "C1.1.1") name = "The ability of leading the way";
        if (c3 == "C1.1.2") name = "The ability of creating involvement";
        nodes.push_back({CompetenceId::parse(c3), name, CompetenceId::parse(c2), 3});
      }
    }
  }
  return nodes;
}

namespace {

constexpr std::array<std::string_view, 5> kImportanceTerms = {
    "unimportant", "of little importance", "moderately important", "important", "very important"};

std::string normalize_term(std::string_view term) {
  std::string out;
  bool pending_space = false;
  for (char ch : term) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

}  // namespace

int importance_to_score(std::string_view term) {
  const std::string key = normalize_term(term);
  for (std::size_t i = 0; i < kImportanceTerms.size(); ++i) {
    if (kImportanceTerms[i] == key) return static_cast<int>(i) + 1;
  }
  throw Error(ErrorCode::UnknownTerm, "unknown importance term '" + std::string(term) + "'");
}

std::string_view score_to_importance(int score) {
  static constexpr std::array<std::string_view, 5> kDisplay = {
      "Unimportant", "Of Little Importance", "Moderately Important", "Important", "Very Important"};
  if (score < 1 || score > 5) throw Error(ErrorCode::ScoreOutOfRange, "importance score must be 1..5");
  return kDisplay[score - 1];
}

}  // namespace compgap
