#include "treepoly/percolation.hpp"

#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "treepoly/enumeration.hpp"
#include "treepoly/errors.hpp"
#include "treepoly/invariants.hpp"

using namespace treepoly;

namespace {

RootedTree path(int n) {
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

RootedTree star(int n) { return RootedTree(std::vector<RootedTree>(n - 1)); }

bool outcome_admissible(const FlatForest& flat, const CuttingOutcome& out) {
  if (out.surviving.empty()) return true;
  std::vector<char> in(flat.size(), 0);
  for (int v : out.surviving) in[v] = 1;
  if (!in[0]) return false;  // must contain the root
  for (int leaf : flat.leaves) {
    if (in[leaf]) return false;  // must avoid every original leaf
  }
  // must be connected through parents
  for (int v : out.surviving) {
    if (v != 0 && !in[flat.parent[v]]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("q parsing rounds to 1/65536 units") {
  CHECK(parse_q("0") == 0);
  CHECK(parse_q("1") == kQOne);
  CHECK(parse_q("0.5") == 32768);
  CHECK(parse_q("0.25") == 16384);
  CHECK(parse_q("0.1") == 6554);  // round(6553.6)
  CHECK(parse_q("1.0") == kQOne);
  CHECK(q_to_rational(32768) == BigRat(1, 2));
  CHECK(q_to_double(16384) == doctest::Approx(0.25));

  CHECK_THROWS_AS(parse_q(""), ParseError);
  CHECK_THROWS_AS(parse_q("0."), ParseError);
  CHECK_THROWS_AS(parse_q("x"), ParseError);
  CHECK_THROWS_AS(parse_q("0.5x"), ParseError);
  CHECK_THROWS_AS(parse_q("1.5"), DomainError);
  CHECK_THROWS_AS(parse_q("-0.5"), ParseError);
}

TEST_CASE("degenerate percolation probabilities") {
  const RootedTree t = parse_tree("((()))");
  const FlatForest flat = FlatForest::of(t);
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    const auto all = percolate_root_cluster(flat, kQOne, rng);
    CHECK(std::count(all.begin(), all.end(), 1) == flat.size());
    const auto none = percolate_root_cluster(flat, 0, rng);
    CHECK(std::count(none.begin(), none.end(), 1) == 0);
  }
  const Estimate sure = estimate_p(t, kQOne, 2000, 7);
  CHECK(sure.value == 1.0);
  const Estimate never = estimate_p(t, 0, 2000, 7);
  CHECK(never.value == 0.0);
}

TEST_CASE("estimate_p tracks the exact polynomial") {
  Invariants inv;
  const std::uint64_t samples = 100000;
  struct Case {
    RootedTree tree;
    const char* q;
  };
  const Case cases[] = {
      {path(2), "0.5"},
      {star(3), "0.5"},
      {path(3), "0.3"},
      {star(4), "0.7"},
      {parse_tree("(()(()))"), "0.9"},
  };
  std::uint64_t seed = 1000;
  for (const Case& c : cases) {
    const QFixed q = parse_q(c.q);
    const Estimate est = estimate_p(c.tree, q, samples, seed++);
    const double exact =
        static_cast<double>(evaluate(inv.p(c.tree), q_to_rational(q), 0, 0));
    CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error + 1e-12);
  }
  // path2 at q = 1/2: exact p = 1/4
  const Estimate quarter = estimate_p(path(2), 32768, samples, 99);
  CHECK(std::abs(quarter.value - 0.25) <= 4.0 * quarter.std_error);
}

TEST_CASE("same seed gives identical results, any job count") {
  const RootedTree t = star(4);
  const Estimate a = estimate_p(t, 32768, 20000, 77);
  const Estimate b = estimate_p(t, 32768, 20000, 77);
  const Estimate c = estimate_p(t, 32768, 20000, 77, 3);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);

  const auto h1 = estimate_separation_histogram(t, 20000, 13);
  const auto h2 = estimate_separation_histogram(t, 20000, 13, 3);
  CHECK(h1.counts == h2.counts);

  const CuttingOutcome o1 = simulate_cutting(t, 5);
  const CuttingOutcome o2 = simulate_cutting(t, 5);
  CHECK(o1.surviving == o2.surviving);
}

TEST_CASE("cutting the one-vertex tree always separates to nothing") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CuttingOutcome out = simulate_cutting(RootedTree{}, seed);
    CHECK(out.surviving.empty());
    CHECK(out.boundary_size == 1);
  }
}

TEST_CASE("every simulated outcome is admissible, zero tolerance") {
  for (int n = 1; n <= 7; ++n) {
    TreeStream stream(n);
    std::uint64_t tree_index = 0;
    while (auto t = stream.next()) {
      const FlatForest flat = FlatForest::of(*t);
      std::mt19937_64 rng(
          derive_stream_seed(424242, (std::uint64_t(n) << 32) | tree_index++));
      std::uint64_t bad = 0;
      for (int rep = 0; rep < 100000; ++rep) {
        if (!outcome_admissible(flat, simulate_cutting_run(flat, rng))) ++bad;
      }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("separation histogram matches the exact PGF") {
  Invariants inv;
  const std::uint64_t samples = 100000;
  std::uint64_t seed = 31337;
  for (const RootedTree& t :
       {RootedTree{}, path(2), path(3), star(3), star(4), parse_tree("(()(()))")}) {
    const UniRatPoly pgf = inv.pgf(t);
    const SeparationHistogram hist =
        estimate_separation_histogram(t, samples, seed++);
    CHECK(hist.samples == samples);
    for (int k = 0; k <= t.vertex_count(); ++k) {
      const double exact = static_cast<double>(pgf.coeff(k));
      if (exact == 0.0) {
        CHECK(hist.frequency(k) == 0.0);  // outside the admissible support
      } else {
        CHECK(std::abs(hist.frequency(k) - exact) <=
              4.0 * hist.std_error(k) + 1e-12);
      }
    }
  }
}

TEST_CASE("histogram of the one-vertex tree is concentrated at zero") {
  const SeparationHistogram hist =
      estimate_separation_histogram(RootedTree{}, 5000, 3);
  CHECK(hist.frequency(0) == 1.0);
}

TEST_CASE("percolation and cutting agree pathwise under shared clocks") {
  std::mt19937_64 rng(2718);
  for (int n = 1; n <= 6; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      const FlatForest flat = FlatForest::of(*t);
      for (int rep = 0; rep < 50; ++rep) {
        std::vector<std::uint64_t> clocks(flat.size());
        for (auto& c : clocks) c = rng();
        for (std::uint64_t threshold :
             {std::uint64_t{0}, rng(), rng(), ~std::uint64_t{0}}) {
          CHECK(percolation_cluster_from_clocks(flat, clocks, threshold) ==
                cutting_cluster_at(flat, clocks, threshold));
        }
      }
    }
  }
}

TEST_CASE("per-outcome separation probabilities") {
  // Exact law of the surviving subtree: for an admissible T' with boundary
  // B, P[T_S = T'] is the integral over u in [0,1] of
  // u^{|T'|-1} (1-u)^{|B|-1} sum_{v in B} p_v(u). Checked against outcome
  // frequencies, and the exact values must sum to 1.
  Invariants inv;
  const MultiPoly one = MultiPoly::one();
  const MultiPoly z = MultiPoly::variable(Var::z);
  std::uint64_t seed = 8088;
  for (const RootedTree& t : {star(3), path(3), parse_tree("(()(()))"),
                              parse_tree("((())(()))")}) {
    const FlatForest flat = FlatForest::of(t);
    const int n = flat.size();
    REQUIRE(n <= 20);

    std::vector<MultiPoly> p_v(n);  // fringe percolation polynomial, in z
    for (int v = 0; v < n; ++v) {
      p_v[v] = inv.p(fringe_subtree(t, v))
                   .substituted({{Var::x, z}});
    }

    std::map<std::uint32_t, BigRat> exact;  // admissible vertex-bitmask -> prob
    BigRat total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool admissible = true;
      if (mask != 0) {
        if (!(mask & 1u)) admissible = false;  // must contain the root
        for (int v = 1; v < n && admissible; ++v) {
          if ((mask >> v) & 1u) {
            if (!((mask >> flat.parent[v]) & 1u)) admissible = false;
          }
        }
        for (int leaf : flat.leaves) {
          if ((mask >> leaf) & 1u) admissible = false;
        }
      }
      if (!admissible) continue;
      int size = 0;
      MultiPoly boundary_sum;
      int boundary = 0;
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) ++size;
      }
      if (mask == 0) {
        boundary_sum = p_v[0];
        boundary = 1;
      } else {
        for (int v = 1; v < n; ++v) {
          if (!((mask >> v) & 1u) && ((mask >> flat.parent[v]) & 1u)) {
            boundary_sum += p_v[v];
            ++boundary;
          }
        }
      }
      const MultiPoly integrand =
          (z.pow(size) * (one - z).pow(boundary - 1) * boundary_sum)
              .divided_by(Var::z);
      const UniRatPoly integral = integrate_unit_interval(integrand);
      REQUIRE(integral.degree() <= 0);
      exact[mask] = integral.coeff(0);
      total += exact[mask];
    }
    CHECK(total == BigRat(1));

    constexpr std::uint64_t kSamples = 100000;
    std::map<std::uint32_t, std::uint64_t> observed;
    std::mt19937_64 rng(derive_stream_seed(seed++, 0));
    for (std::uint64_t s = 0; s < kSamples; ++s) {
      const CuttingOutcome out = simulate_cutting_run(flat, rng);
      std::uint32_t mask = 0;
      for (int v : out.surviving) mask |= 1u << v;
      ++observed[mask];
    }
    for (const auto& [mask, count] : observed) {
      CHECK(exact.count(mask) == 1);  // only admissible outcomes occur
    }
    for (const auto& [mask, prob] : exact) {
      const double p = static_cast<double>(prob);
      const double freq =
          static_cast<double>(observed.count(mask) ? observed.at(mask) : 0) /
          kSamples;
      const double sigma = std::sqrt(p * (1.0 - p) / kSamples);
      CHECK(std::abs(freq - p) <= 4.0 * sigma + 1e-12);
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(estimate_p(path(2), kQOne + 1, 10, 1), DomainError);
  CHECK_THROWS_AS(estimate_p(path(2), 0, 0, 1), DomainError);
  CHECK_THROWS_AS(estimate_separation_histogram(path(2), 0, 1), DomainError);
}
