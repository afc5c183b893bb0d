#include "treepoly/rooted_tree.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "treepoly/errors.hpp"

namespace treepoly {

RootedTree::RootedTree(std::vector<RootedTree> children)
    : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end(),
            [](const RootedTree& a, const RootedTree& b) {
              return a.encoding() > b.encoding();
            });
  std::size_t len = 2;
  for (const RootedTree& c : children_) {
    vertex_count_ += c.vertex_count();
    len += c.encoding().size();
  }
  encoding_.reserve(len);
  encoding_.push_back('(');
  for (const RootedTree& c : children_) encoding_ += c.encoding();
  encoding_.push_back(')');
}

RootedForest::RootedForest(std::vector<RootedTree> trees)
    : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(),
            [](const RootedTree& a, const RootedTree& b) {
              return a.encoding() > b.encoding();
            });
  for (const RootedTree& t : trees_) vertex_count_ += t.vertex_count();
}

std::string RootedForest::encoding() const {
  std::string out;
  for (const RootedTree& t : trees_) out += t.encoding();
  return out;
}

namespace {

std::size_t skip_ws(std::string_view text, std::size_t pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return pos;
}

// Parses one tree starting at pos (which must point at '('); returns the
// tree and leaves pos just past its closing ')'.
RootedTree parse_one_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(') {
    throw ParseError("expected '('", pos);
  }
  // Stack of partially read children lists, one frame per open '('.
  std::vector<std::vector<RootedTree>> stack;
  stack.emplace_back();
  ++pos;
  while (true) {
    pos = skip_ws(text, pos);
    if (pos >= text.size()) {
      throw ParseError("unbalanced input: missing ')'", pos);
    }
    char c = text[pos];
    if (c == '(') {
      stack.emplace_back();
      ++pos;
    } else if (c == ')') {
      RootedTree done(std::move(stack.back()));
      stack.pop_back();
      ++pos;
      if (stack.empty()) return done;
      stack.back().push_back(std::move(done));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
}

}  // namespace

RootedTree parse_tree(std::string_view text) {
  std::size_t pos = skip_ws(text, 0);
  if (pos >= text.size()) throw ParseError("empty input", pos);
  RootedTree t = parse_one_tree(text, pos);
  pos = skip_ws(text, pos);
  if (pos < text.size()) throw ParseError("trailing garbage after tree", pos);
  return t;
}

RootedForest parse_forest(std::string_view text) {
  std::vector<RootedTree> trees;
  std::size_t pos = skip_ws(text, 0);
  while (pos < text.size()) {
    trees.push_back(parse_one_tree(text, pos));
    pos = skip_ws(text, pos);
  }
  return RootedForest(std::move(trees));
}

RootedTree parse_level_sequence(std::string_view text) {
  std::vector<int> depths;
  std::vector<std::size_t> offsets;
  std::size_t pos = skip_ws(text, 0);
  while (pos < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a depth value", pos);
    }
    offsets.push_back(pos);
    long v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw ParseError("depth out of range", offsets.back());
      ++pos;
    }
    depths.push_back(static_cast<int>(v));
    pos = skip_ws(text, pos);
  }
  if (depths.empty()) throw ParseError("empty input", 0);
  if (depths[0] != 0) throw ParseError("root depth must be 0", offsets[0]);
  for (std::size_t i = 1; i < depths.size(); ++i) {
    if (depths[i] < 1 || depths[i] > depths[i - 1] + 1) {
      throw ParseError("invalid depth step", offsets[i]);
    }
  }
  // One frame of accumulated children per depth level.
  std::vector<std::vector<RootedTree>> frames(1);
  int cur_depth = 0;
  auto close_to = [&](int target) {
    while (cur_depth > target) {
      RootedTree done(std::move(frames.back()));
      frames.pop_back();
      frames.back().push_back(std::move(done));
      --cur_depth;
    }
  };
  for (std::size_t i = 1; i < depths.size(); ++i) {
    close_to(depths[i] - 1);
    frames.emplace_back();
    cur_depth = depths[i];
  }
  close_to(0);
  return RootedTree(std::move(frames[0]));
}

RootedTree wedge(const RootedForest& f) { return RootedTree(f.trees()); }

RootedForest remove_root(const RootedTree& t) {
  return RootedForest(t.children());
}

namespace {

int count_leaves(const RootedTree& t) {
  if (t.is_leaf()) return 1;
  int total = 0;
  for (const RootedTree& c : t.children()) total += count_leaves(c);
  return total;
}

}  // namespace

TreeStats tree_stats(const RootedForest& f) {
  TreeStats stats;
  stats.n_vertices = f.vertex_count();
  for (const RootedTree& t : f.trees()) stats.n_leaves += count_leaves(t);
  if (f.component_count() == 1) {
    const RootedTree* v = &f.trees().front();
    stats.stem_length = 1;
    while (v->children().size() == 1) {
      v = &v->children().front();
      ++stats.stem_length;
    }
  }
  return stats;
}

TreeStats tree_stats(const RootedTree& t) {
  return tree_stats(RootedForest({t}));
}

namespace {

const RootedTree* find_preorder(const RootedTree& t, int& remaining) {
  if (remaining == 0) return &t;
  --remaining;
  for (const RootedTree& c : t.children()) {
    if (const RootedTree* hit = find_preorder(c, remaining)) return hit;
  }
  return nullptr;
}

}  // namespace

RootedTree fringe_subtree(const RootedTree& t, int preorder_index) {
  if (preorder_index < 0 || preorder_index >= t.vertex_count()) {
    throw DomainError("fringe_subtree: vertex handle " +
                      std::to_string(preorder_index) + " out of range [0, " +
                      std::to_string(t.vertex_count()) + ")");
  }
  int remaining = preorder_index;
  return *find_preorder(t, remaining);
}

namespace {

void flatten_into(const RootedTree& t, int parent, FlatForest& out) {
  int idx = out.size();
  out.parent.push_back(parent);
  out.children.emplace_back();
  if (parent >= 0) out.children[parent].push_back(idx);
  if (t.is_leaf()) out.leaves.push_back(idx);
  for (const RootedTree& c : t.children()) flatten_into(c, idx, out);
}

}  // namespace

FlatForest FlatForest::of(const RootedTree& t) {
  FlatForest out;
  out.roots.push_back(0);
  flatten_into(t, -1, out);
  return out;
}

FlatForest FlatForest::of(const RootedForest& f) {
  FlatForest out;
  for (const RootedTree& t : f.trees()) {
    out.roots.push_back(out.size());
    flatten_into(t, -1, out);
  }
  return out;
}

}  // namespace treepoly
