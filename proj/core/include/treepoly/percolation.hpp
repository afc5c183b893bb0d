#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "treepoly/bignum.hpp"
#include "treepoly/rooted_tree.hpp"

namespace treepoly {

/// All randomness flows from a caller-supplied 64-bit seed. Sample batches
/// are a fixed size, and batch b always runs on the engine seeded with
/// derive_stream_seed(seed, b), so estimates are byte-identical for every
/// worker count.

std::uint64_t splitmix64(std::uint64_t state);

inline std::uint64_t derive_stream_seed(std::uint64_t seed,
                                        std::uint64_t stream_index) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (stream_index + 1));
}

/// Retention probability in units of 2^-16, so every accepted q is exactly
/// representable: 0 .. 65536.
using QFixed = std::uint32_t;
inline constexpr QFixed kQOne = 65536;

/// Parses a decimal in [0, 1] and rounds to the nearest multiple of 2^-16,
/// ties away from zero. Raises ParseError on malformed input, DomainError
/// outside [0, 1].
QFixed parse_q(std::string_view decimal);

BigRat q_to_rational(QFixed q);
double q_to_double(QFixed q);

struct Estimate {
  double value = 0.0;
  std::uint64_t samples = 0;
  /// sqrt(value * (1 - value) / samples)
  double std_error = 0.0;
};

/// One percolation draw: every vertex is kept independently with
/// probability q; returns the kept component of the root (all zeros when
/// the root is deleted) as flags over pre-order handles.
std::vector<char> percolate_root_cluster(const FlatForest& tree, QFixed q,
                                         std::mt19937_64& rng);
std::vector<char> percolate_root_cluster(const RootedTree& t, QFixed q,
                                         std::uint64_t seed);

/// Fraction of percolation draws whose root cluster keeps at least one
/// original leaf, i.e. the Monte Carlo estimate of p_T(q). Batches are
/// distributed over jobs threads; the merged count is the same for every
/// jobs value.
Estimate estimate_p(const RootedTree& t, QFixed q, std::uint64_t samples,
                    std::uint64_t seed, int jobs = 1);

struct CuttingOutcome {
  /// Vertices of the surviving subtree at separation, as ascending
  /// pre-order handles. Always admissible: empty, or containing the root
  /// and no original leaf.
  std::vector<int> surviving;
  int boundary_size = 0;  // boundary of the empty set is {root}, size 1

  int size() const noexcept { return static_cast<int>(surviving.size()); }
};

/// One run of the continuous-time cutting model: every vertex gets an
/// independent uniform alarm clock, vertices are cut in clock order with
/// rootless components discarded, and the process is stopped at
/// separation, the first instant the root cluster holds no original leaf.
CuttingOutcome simulate_cutting(const RootedTree& t, std::uint64_t seed);
CuttingOutcome simulate_cutting_run(const FlatForest& tree,
                                    std::mt19937_64& rng);

struct SeparationHistogram {
  std::vector<std::uint64_t> counts;  // index = surviving size, 0..n
  std::uint64_t samples = 0;

  double frequency(int size) const;
  double std_error(int size) const;
};

/// Empirical distribution of the surviving size at separation, to be held
/// against the exact PGF coefficients.
SeparationHistogram estimate_separation_histogram(const RootedTree& t,
                                                  std::uint64_t samples,
                                                  std::uint64_t seed,
                                                  int jobs = 1);

/// Standard-coupling helpers sharing one vector of clock draws: the
/// percolation root cluster that keeps exactly the vertices with
/// clock > threshold equals the cutting-model root cluster once every
/// clock <= threshold has rung.
std::vector<char> percolation_cluster_from_clocks(
    const FlatForest& tree, const std::vector<std::uint64_t>& clocks,
    std::uint64_t threshold);
std::vector<char> cutting_cluster_at(const FlatForest& tree,
                                     const std::vector<std::uint64_t>& clocks,
                                     std::uint64_t threshold);

}  // namespace treepoly
