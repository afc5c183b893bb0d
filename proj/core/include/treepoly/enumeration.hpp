#pragma once

#include <optional>
#include <vector>

#include "treepoly/bignum.hpp"
#include "treepoly/rooted_tree.hpp"

namespace treepoly {

/// Number of non-isomorphic rooted trees on n vertices, computed by the
/// divisor-sum convolution recurrence. Deliberately enumeration-free so it
/// can serve as an independent count oracle for TreeStream.
BigInt count_rooted_trees(int n);

/// Streams every isomorphism class of rooted trees on n vertices exactly
/// once. Generation walks canonical level sequences in decreasing
/// lexicographic order with the constant-amortized-time successor rule:
/// starting from the path [1,2,...,n], locate the last entry p with
/// level > 2 and its parent q, then repeat the block [q, p) until the
/// sequence is refilled; the star [1,2,2,...,2] is last.
///
/// A stream is single-consumer. For parallel work, give each worker its
/// own stream over the same n and let worker j of k handle the items whose
/// 0-based generation index is congruent to j mod k; advancing the
/// successor rule is negligible next to any per-tree work, and the
/// partition is deterministic, disjoint, and exhaustive.
class TreeStream {
 public:
  explicit TreeStream(int n);

  /// Next canonical tree, or nullopt once exhausted.
  std::optional<RootedTree> next();

  /// Advances and exposes the raw level sequence (root level 1) without
  /// building a tree; nullptr once exhausted. The pointee is invalidated
  /// by the following call. Intended for counting and sharding loops.
  const std::vector<int>* next_level_sequence();

 private:
  std::vector<int> levels_;
  bool fresh_ = true;
  bool done_ = false;
};

/// Builds the rooted tree described by a level sequence (root level =
/// levels[0], each later entry one deeper than its parent).
RootedTree tree_from_level_sequence(const std::vector<int>& levels);

/// Streams every isomorphism class of rooted forests with the given total
/// number of vertices (n >= 0), as the root branches of the (n+1)-vertex
/// trees. Count therefore equals count_rooted_trees(n + 1).
class ForestStream {
 public:
  explicit ForestStream(int total_vertices);
  std::optional<RootedForest> next();

 private:
  TreeStream inner_;
};

}  // namespace treepoly
