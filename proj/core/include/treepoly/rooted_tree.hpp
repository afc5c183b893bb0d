#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace treepoly {

/// A rooted tree held as the canonical representative of its isomorphism
/// class: the children of every vertex are sorted in descending
/// lexicographic order of their canonical encodings, recursively. Two
/// RootedTree values compare equal exactly when the trees are isomorphic
/// as rooted trees.
///
/// Values are immutable after construction and safe to share across
/// threads.
class RootedTree {
 public:
  /// The one-vertex tree.
  RootedTree() : encoding_("()") {}

  /// A tree whose root has the given subtrees as children. The children
  /// are reordered into canonical order; they need not arrive sorted.
  explicit RootedTree(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const noexcept { return children_; }
  int vertex_count() const noexcept { return vertex_count_; }
  bool is_leaf() const noexcept { return children_.empty(); }

  /// Canonical parenthesis encoding, e.g. "(()(()))". Equal trees have
  /// equal encodings.
  const std::string& encoding() const noexcept { return encoding_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.encoding_ == b.encoding_;
  }
  friend bool operator!=(const RootedTree& a, const RootedTree& b) {
    return !(a == b);
  }

 private:
  std::vector<RootedTree> children_;
  std::string encoding_;
  int vertex_count_ = 1;
};

/// A possibly empty multiset of rooted trees, stored canonically sorted
/// (same descending order as tree children). Equality is forest
/// isomorphism.
class RootedForest {
 public:
  /// The empty forest.
  RootedForest() = default;

  explicit RootedForest(std::vector<RootedTree> trees);

  const std::vector<RootedTree>& trees() const noexcept { return trees_; }
  bool empty() const noexcept { return trees_.empty(); }
  int component_count() const noexcept { return static_cast<int>(trees_.size()); }
  int vertex_count() const noexcept { return vertex_count_; }

  /// Concatenated canonical tree encodings; "" for the empty forest.
  /// Unambiguous, since each tree is one balanced parenthesis block.
  std::string encoding() const;

  friend bool operator==(const RootedForest& a, const RootedForest& b) {
    return a.trees_ == b.trees_;
  }
  friend bool operator!=(const RootedForest& a, const RootedForest& b) {
    return !(a == b);
  }

 private:
  std::vector<RootedTree> trees_;
  int vertex_count_ = 0;
};

/// Parses the parenthesis grammar  tree := "(" tree* ")"  into canonical
/// form. ASCII whitespace between tokens is skipped; anything else, an
/// unbalanced encoding, an empty input, or trailing garbage raises
/// ParseError with the offending byte offset.
RootedTree parse_tree(std::string_view text);

/// Parses whitespace-separated trees (one per line in forest files) until
/// end of input. Empty input yields the empty forest.
RootedForest parse_forest(std::string_view text);

/// Parses the level-sequence form "d0 d1 ... d_{n-1}": depths of the
/// vertices in depth-first pre-order, root depth 0.
RootedTree parse_level_sequence(std::string_view text);

/// The canonical encoding of t. Inverse of parse_tree on canonical input.
inline const std::string& serialize_canonical(const RootedTree& t) {
  return t.encoding();
}

/// Joins a new root to the component roots of f. wedge(remove_root(t)) == t.
RootedTree wedge(const RootedForest& f);

/// The forest of root branches of t. remove_root(wedge(f)) == f.
RootedForest remove_root(const RootedTree& t);

struct TreeStats {
  int n_vertices = 0;
  int n_leaves = 0;
  /// Vertices from the root to the first vertex with != 1 child, both ends
  /// included; 0 for forests with zero or at least two components.
  int stem_length = 0;
};

TreeStats tree_stats(const RootedForest& f);
TreeStats tree_stats(const RootedTree& t);

/// The fringe subtree rooted at the vertex with the given index in
/// depth-first pre-order over the canonical form (root = 0). Throws
/// DomainError for an out-of-range handle.
RootedTree fringe_subtree(const RootedTree& t, int preorder_index);

/// Flattened adjacency view of a canonical tree or forest, indexed in
/// depth-first pre-order (component by component for forests). Roots have
/// parent -1. Used by the definitional brute-force computations and the
/// simulators.
struct FlatForest {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
  std::vector<int> leaves;  // pre-order indices of outdegree-0 vertices

  int size() const noexcept { return static_cast<int>(parent.size()); }

  static FlatForest of(const RootedTree& t);
  static FlatForest of(const RootedForest& f);
};

}  // namespace treepoly
