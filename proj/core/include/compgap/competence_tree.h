#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace compgap {

// Hierarchical competence identifier in canonical form "C<i>", "C<i>.<j>" or
// "C<i>.<j>.<k>" with 1-based indices. Ordering is numeric per component, so
// C1.10 sorts after C1.9.
class CompetenceId {
 public:
  CompetenceId() = default;

  // Throws Error(InvalidId) when `text` is not canonical.
  static CompetenceId parse(std::string_view text);
  static bool is_canonical(std::string_view text);

  const std::string& str() const noexcept { return text_; }
  std::span<const int> path() const noexcept { return path_; }
  int level() const noexcept { return static_cast<int>(path_.size()); }
  // Identifier of the enclosing node implied by the id itself.
  std::optional<CompetenceId> prefix_parent() const;

  bool empty() const noexcept { return path_.empty(); }

  friend bool operator==(const CompetenceId& a, const CompetenceId& b) { return a.path_ == b.path_; }
  friend std::strong_ordering operator<=>(const CompetenceId& a, const CompetenceId& b) {
    return a.path_ <=> b.path_;
  }

 private:
  std::string text_;
  std::vector<int> path_;
};

struct CompetenceNode {
  CompetenceId id;
  std::string name;
  std::optional<CompetenceId> parent;
  int level = 0;
};

// Read-only view returned by CompetenceTree::query.
struct NodeView {
  const CompetenceNode* node = nullptr;
  std::span<const CompetenceId> children;
  std::vector<CompetenceId> leaf_descendants;

  int level() const { return node->level; }
  const std::optional<CompetenceId>& parent() const { return node->parent; }
  bool is_leaf() const { return children.empty(); }
};

// Three-level competence taxonomy. Immutable after construction.
class CompetenceTree {
 public:
  static constexpr int kDepth = 3;

  // Validates and indexes a flat node list. Order-insensitive.
  // Errors: DuplicateId, MissingParent, DepthViolation, OrphanInternal.
  static CompetenceTree build(std::vector<CompetenceNode> nodes);

  // Errors: UnknownId.
  NodeView query(const CompetenceId& id) const;
  NodeView query(std::string_view id) const { return query(CompetenceId::parse(id)); }

  bool contains(const CompetenceId& id) const { return index_.count(id.str()) != 0; }
  const CompetenceNode& node(const CompetenceId& id) const;
  std::span<const CompetenceId> children(const CompetenceId& id) const;

  const std::vector<CompetenceId>& roots() const noexcept { return by_level_[0]; }
  // All ids at `level` (1..3), in tree order (parents in id order, children in id order).
  const std::vector<CompetenceId>& level_ids(int level) const;
  const std::vector<CompetenceId>& leaves() const { return level_ids(kDepth); }
  std::vector<CompetenceId> leaf_descendants(const CompetenceId& id) const;
  // Ancestor of `id` at `level` (which must be <= id's level).
  CompetenceId ancestor_at(const CompetenceId& id, int level) const;

  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  std::vector<CompetenceNode> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<CompetenceId>> children_;
  std::vector<std::vector<CompetenceId>> by_level_;
};

// Canonical 3 x 4 x 4 taxonomy with professional, innovative and social branches.
std::vector<CompetenceNode> canonical_pis_nodes();

// Maps a lexical importance term to 5..1. Matching ignores case and collapses
// whitespace. Errors: UnknownTerm.
int importance_to_score(std::string_view term);
std::string_view score_to_importance(int score);

}  // namespace compgap

template <>
struct std::hash<compgap::CompetenceId> {
  std::size_t operator()(const compgap::CompetenceId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
