#include "treepoly/percolation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "treepoly/errors.hpp"

namespace treepoly {

std::uint64_t splitmix64(std::uint64_t state) {
  state += 0x9E3779B97F4A7C15ull;
  state = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ull;
  state = (state ^ (state >> 27)) * 0x94D049BB133111EBull;
  return state ^ (state >> 31);
}

QFixed parse_q(std::string_view decimal) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t count = 0;
    while (start + count < decimal.size() &&
           decimal[start + count] >= '0' && decimal[start + count] <= '9') {
      ++count;
    }
    return count;
  };
  const std::size_t int_len = digits(0);
  if (int_len == 0) throw ParseError("expected a decimal number", 0);
  BigInt numerator(std::string(decimal.substr(0, int_len)));
  BigInt denominator = 1;
  pos = int_len;
  if (pos < decimal.size() && decimal[pos] == '.') {
    ++pos;
    const std::size_t frac_len = digits(pos);
    if (frac_len == 0) throw ParseError("expected digits after '.'", pos);
    for (std::size_t i = 0; i < frac_len; ++i) {
      numerator = numerator * 10 + (decimal[pos + i] - '0');
      denominator *= 10;
    }
    pos += frac_len;
  }
  if (pos != decimal.size()) throw ParseError("trailing garbage", pos);
  if (numerator > denominator) {
    throw DomainError("q must lie in [0, 1]");
  }
  // Round q * 2^16 to the nearest integer, ties up.
  BigInt scaled = numerator * kQOne * 2 + denominator;
  return static_cast<QFixed>(scaled / (denominator * 2));
}

BigRat q_to_rational(QFixed q) { return BigRat(q, kQOne); }

double q_to_double(QFixed q) { return static_cast<double>(q) / kQOne; }

namespace {

constexpr std::uint64_t kSamplesPerBatch = 4096;

inline bool keep_vertex(std::uint64_t draw, QFixed q) {
  return static_cast<QFixed>(draw >> 48) < q;
}

// Hands out batch indices 0 .. batch_count-1 across jobs threads and sums
// whatever per-batch tallies run_batch produces. run_batch(batch, size)
// must only touch its own state; results are merged by integer addition,
// so the outcome is independent of scheduling.
void run_batches(std::uint64_t samples, int jobs,
                 const std::function<void(std::uint64_t, std::uint64_t)>& run_batch) {
  const std::uint64_t batch_count =
      (samples + kSamplesPerBatch - 1) / kSamplesPerBatch;
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::uint64_t b = 0; b < batch_count; ++b) {
      const std::uint64_t offset = b * kSamplesPerBatch;
      run_batch(b, std::min(kSamplesPerBatch, samples - offset));
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::uint64_t b = next.fetch_add(1); b < batch_count;
           b = next.fetch_add(1)) {
        const std::uint64_t offset = b * kSamplesPerBatch;
        run_batch(b, std::min(kSamplesPerBatch, samples - offset));
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

// Marks, into cluster, the kept component of the root given per-vertex
// keep flags.
void root_component(const FlatForest& tree, const std::vector<char>& kept,
                    std::vector<char>& cluster) {
  cluster.assign(tree.size(), 0);
  if (tree.size() == 0 || !kept[0]) return;
  std::vector<int> stack = {0};
  cluster[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : tree.children[v]) {
      if (kept[c] && !cluster[c]) {
        cluster[c] = 1;
        stack.push_back(c);
      }
    }
  }
}

}  // namespace

std::vector<char> percolate_root_cluster(const FlatForest& tree, QFixed q,
                                         std::mt19937_64& rng) {
  if (q > kQOne) throw DomainError("q must lie in [0, 1]");
  const int n = tree.size();
  std::vector<char> kept(n);
  for (int v = 0; v < n; ++v) kept[v] = keep_vertex(rng(), q);
  std::vector<char> cluster;
  root_component(tree, kept, cluster);
  return cluster;
}

std::vector<char> percolate_root_cluster(const RootedTree& t, QFixed q,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(derive_stream_seed(seed, 0));
  const FlatForest flat = FlatForest::of(t);
  return percolate_root_cluster(flat, q, rng);
}

Estimate estimate_p(const RootedTree& t, QFixed q, std::uint64_t samples,
                    std::uint64_t seed, int jobs) {
  if (samples < 1) throw DomainError("estimate_p: samples must be >= 1");
  if (q > kQOne) throw DomainError("q must lie in [0, 1]");
  const FlatForest flat = FlatForest::of(t);
  const int n = flat.size();

  std::atomic<std::uint64_t> hits{0};
  run_batches(samples, jobs, [&](std::uint64_t batch, std::uint64_t size) {
    std::mt19937_64 rng(derive_stream_seed(seed, batch));
    std::vector<char> kept(n);
    std::vector<char> cluster;
    std::uint64_t local = 0;
    for (std::uint64_t s = 0; s < size; ++s) {
      for (int v = 0; v < n; ++v) kept[v] = keep_vertex(rng(), q);
      root_component(flat, kept, cluster);
      for (int leaf : flat.leaves) {
        if (cluster[leaf]) {
          ++local;
          break;
        }
      }
    }
    hits += local;
  });

  Estimate est;
  est.samples = samples;
  est.value = static_cast<double>(hits.load()) / static_cast<double>(samples);
  est.std_error =
      std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(samples));
  return est;
}

namespace {

// Shared replay core: cuts vertices in clock order (ties by pre-order
// index). Stops at separation when stop_at_separation, otherwise runs
// until every clock <= threshold has rung. Returns the root-cluster flags
// at the stopping time.
std::vector<char> replay_cuts(const FlatForest& tree,
                              const std::vector<std::uint64_t>& clocks,
                              bool stop_at_separation,
                              std::uint64_t threshold) {
  const int n = tree.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return clocks[a] != clocks[b] ? clocks[a] < clocks[b] : a < b;
  });

  std::vector<char> in_cluster(n, 1);
  int leaves_alive = static_cast<int>(tree.leaves.size());
  std::vector<int> stack;
  for (int v : order) {
    if (!stop_at_separation && clocks[v] > threshold) break;
    if (!in_cluster[v]) continue;  // already discarded with a cut ancestor
    stack.push_back(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      in_cluster[u] = 0;
      if (tree.children[u].empty()) --leaves_alive;
      for (int c : tree.children[u]) {
        if (in_cluster[c]) stack.push_back(c);
      }
    }
    if (stop_at_separation && leaves_alive == 0) return in_cluster;
  }
  return in_cluster;
}

CuttingOutcome outcome_from_cluster(const FlatForest& tree,
                                    const std::vector<char>& in_cluster) {
  CuttingOutcome out;
  for (int v = 0; v < tree.size(); ++v) {
    if (in_cluster[v]) out.surviving.push_back(v);
  }
  if (out.surviving.empty()) {
    out.boundary_size = 1;  // boundary of the empty set is {root}
  } else {
    for (int v = 1; v < tree.size(); ++v) {
      if (!in_cluster[v] && in_cluster[tree.parent[v]]) ++out.boundary_size;
    }
  }
  return out;
}

}  // namespace

CuttingOutcome simulate_cutting_run(const FlatForest& tree,
                                    std::mt19937_64& rng) {
  const int n = tree.size();
  std::vector<std::uint64_t> clocks(n);
  for (int v = 0; v < n; ++v) clocks[v] = rng();
  return outcome_from_cluster(tree, replay_cuts(tree, clocks, true, 0));
}

CuttingOutcome simulate_cutting(const RootedTree& t, std::uint64_t seed) {
  std::mt19937_64 rng(derive_stream_seed(seed, 0));
  const FlatForest flat = FlatForest::of(t);
  return simulate_cutting_run(flat, rng);
}

double SeparationHistogram::frequency(int size) const {
  if (size < 0 || size >= static_cast<int>(counts.size()) || samples == 0) {
    return 0.0;
  }
  return static_cast<double>(counts[size]) / static_cast<double>(samples);
}

double SeparationHistogram::std_error(int size) const {
  const double f = frequency(size);
  return samples == 0 ? 0.0
                      : std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
}

SeparationHistogram estimate_separation_histogram(const RootedTree& t,
                                                  std::uint64_t samples,
                                                  std::uint64_t seed,
                                                  int jobs) {
  if (samples < 1) {
    throw DomainError("estimate_separation_histogram: samples must be >= 1");
  }
  const FlatForest flat = FlatForest::of(t);
  std::vector<std::atomic<std::uint64_t>> counts(flat.size() + 1);
  run_batches(samples, jobs, [&](std::uint64_t batch, std::uint64_t size) {
    std::mt19937_64 rng(derive_stream_seed(seed, batch));
    std::vector<std::uint64_t> local(flat.size() + 1, 0);
    for (std::uint64_t s = 0; s < size; ++s) {
      ++local[simulate_cutting_run(flat, rng).size()];
    }
    for (std::size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
  });

  SeparationHistogram hist;
  hist.samples = samples;
  hist.counts.reserve(counts.size());
  for (const auto& c : counts) hist.counts.push_back(c.load());
  return hist;
}

std::vector<char> percolation_cluster_from_clocks(
    const FlatForest& tree, const std::vector<std::uint64_t>& clocks,
    std::uint64_t threshold) {
  std::vector<char> kept(tree.size());
  for (int v = 0; v < tree.size(); ++v) kept[v] = clocks[v] > threshold;
  std::vector<char> cluster;
  root_component(tree, kept, cluster);
  return cluster;
}

std::vector<char> cutting_cluster_at(const FlatForest& tree,
                                     const std::vector<std::uint64_t>& clocks,
                                     std::uint64_t threshold) {
  return replay_cuts(tree, clocks, false, threshold);
}

}  // namespace treepoly
