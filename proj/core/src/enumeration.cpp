#include "treepoly/enumeration.hpp"

#include <numeric>
#include <utility>

#include "treepoly/errors.hpp"

namespace treepoly {

BigInt count_rooted_trees(int n) {
  if (n < 1) throw DomainError("count_rooted_trees: n must be >= 1");
  // r(m+1) = (1/m) * sum_{k=1..m} s(k) r(m+1-k),  s(k) = sum_{d|k} d r(d).
  std::vector<BigInt> r(n + 1);
  std::vector<BigInt> s(n + 1);
  r[1] = 1;
  for (int m = 1; m < n; ++m) {
    s[m] = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) s[m] += d * r[d];
    }
    BigInt total = 0;
    for (int k = 1; k <= m; ++k) total += s[k] * r[m + 1 - k];
    r[m + 1] = total / m;  // exact
  }
  return r[n];
}

TreeStream::TreeStream(int n) {
  if (n < 1) throw DomainError("TreeStream: n must be >= 1");
  levels_.resize(n);
  std::iota(levels_.begin(), levels_.end(), 1);  // the path
}

const std::vector<int>* TreeStream::next_level_sequence() {
  if (done_) return nullptr;
  if (fresh_) {
    fresh_ = false;
    return &levels_;
  }
  const int n = static_cast<int>(levels_.size());
  int p = n - 1;
  while (p >= 0 && levels_[p] <= 2) --p;
  if (p < 0) {
    done_ = true;
    return nullptr;
  }
  int q = p - 1;
  while (levels_[q] != levels_[p] - 1) --q;
  for (int i = p; i < n; ++i) levels_[i] = levels_[i - (p - q)];
  return &levels_;
}

std::optional<RootedTree> TreeStream::next() {
  const std::vector<int>* seq = next_level_sequence();
  if (seq == nullptr) return std::nullopt;
  return tree_from_level_sequence(*seq);
}

RootedTree tree_from_level_sequence(const std::vector<int>& levels) {
  if (levels.empty()) throw DomainError("empty level sequence");
  // One frame of accumulated children per open level.
  std::vector<std::vector<RootedTree>> frames(1);
  int depth = 0;  // frames.size() - 1
  auto close_to = [&](int target) {
    while (depth > target) {
      RootedTree done(std::move(frames.back()));
      frames.pop_back();
      frames.back().push_back(std::move(done));
      --depth;
    }
  };
  const int root_level = levels[0];
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int rel = levels[i] - root_level;
    if (rel < 1 || rel > depth + 1) throw DomainError("invalid level sequence");
    close_to(rel - 1);
    frames.emplace_back();
    depth = rel;
  }
  close_to(0);
  return RootedTree(std::move(frames[0]));
}

namespace {

int checked_forest_size(int total_vertices) {
  if (total_vertices < 0) {
    throw DomainError("ForestStream: vertex count must be >= 0");
  }
  return total_vertices + 1;
}

}  // namespace

ForestStream::ForestStream(int total_vertices)
    : inner_(checked_forest_size(total_vertices)) {}

std::optional<RootedForest> ForestStream::next() {
  std::optional<RootedTree> t = inner_.next();
  if (!t) return std::nullopt;
  return remove_root(*t);
}

}  // namespace treepoly
