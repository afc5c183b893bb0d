#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "treepoly/bignum.hpp"
#include "treepoly/multipoly.hpp"
#include "treepoly/rooted_tree.hpp"
#include "treepoly/unirat_poly.hpp"

namespace treepoly {

/// Memoizing computer for the polynomial invariants of rooted trees and
/// forests, evaluated through their recursions:
///
///   P(.) = 1 + x*y            P(T) = 1 - x + x * P(T - root)
///   S(.) = y + x              S(T) = y + x * prod_i S(branch_i)
///   A(.) = y                  A(T) = y + x * prod_i A(branch_i)
///   p(.) = x                  p(T) = x * (1 - prod_i (1 - p(branch_i)))
///   M(.) = 1                  M(T) = p_T(z)/z
///                                    + x * sum_i M(branch_i) * prod_{j != i} A(branch_j)
///
/// For forests, P, S, A are the products over components; the empty forest
/// maps to 1. M and the separation-size PGF are defined for trees only.
///
/// Results are cached by canonical encoding. An exhaustive sweep
/// re-encounters the same branches constantly, so one Invariants instance
/// per worker gives near-linear reuse without any locking; values are
/// deterministic, so workers never need to share a cache.
class Invariants {
 public:
  const MultiPoly& P(const RootedTree& t);
  MultiPoly P(const RootedForest& f);
  const MultiPoly& S(const RootedTree& t);
  MultiPoly S(const RootedForest& f);
  const MultiPoly& A(const RootedTree& t);
  MultiPoly A(const RootedForest& f);

  /// Univariate in x. Satisfies p = 1 - P(x, -1).
  const MultiPoly& p(const RootedTree& t);

  /// Trivariate in x, y, z. Defined for trees only.
  const MultiPoly& M(const RootedTree& t);

  /// Probability generating function of the surviving-subtree size at
  /// separation under the random cutting model:
  /// the integral over u in [0,1] of M(x*u, 1-u, u).
  UniRatPoly pgf(const RootedTree& t);

 private:
  using Cache = std::unordered_map<std::string, MultiPoly>;
  Cache p_cache_, s_cache_, a_cache_, little_p_cache_, m_cache_;
};

/// Definitional (brute-force) computations, kept independent of the
/// recursions above so the two routes can check each other.

/// Sums x^{vertices} y^{leaves} over all 2^l leaf-induced subforests,
/// enumerated as leaf subsets. Refuses forests with more than 30 leaves.
MultiPoly brute_P(const RootedForest& f);
MultiPoly brute_P(const RootedTree& t);

/// Sums x^{|T'|} y^{|boundary(T')|} over all subtrees (the empty subgraph
/// or any connected root-containing subgraph), with boundary({}) = {root}.
/// Refuses trees with more than 20 vertices.
MultiPoly brute_S(const RootedTree& t);

/// Same sum restricted to admissible subtrees: empty, or root-containing
/// and avoiding every leaf of t.
MultiPoly brute_A(const RootedTree& t);

/// Direct evaluation of the defining sum for M over admissible subtrees,
/// using per-vertex fringe polynomials. Refuses trees with more than 16
/// vertices.
MultiPoly brute_M(const RootedTree& t);

/// The percolation polynomial recovered from P: 1 - P(x, -1).
MultiPoly p_from_P(const MultiPoly& P);

/// Stem size read off a P-polynomial: -dP/dx evaluated at (1, -1).
/// Zero when the input is the P-polynomial of a non-tree forest.
BigInt stem_from_P(const MultiPoly& P);

/// Structural hypotheses on S written as sum_i a_i(y) x^i with
/// n = deg_x S: the leading a_n is exactly 1, every lower a_i is divisible
/// by y, and a_0 is exactly y. Holds precisely for trees.
bool eisenstein_check(const RootedForest& f);
bool eisenstein_check(const RootedTree& t);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;  // witnesses, filled on failure
};

struct IdentityReport {
  std::string tree;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Evaluates, by exact polynomial identity, the relations tying the
/// invariants of one tree together:
///   M(x,y,1) = dA/dy,  A(x,1-x) = 1 - p,  M(x,1-x,x) = dp/dx,
///   P(1,y) = (1+y)^leaves,  deg_x P = vertices,  deg_y P = leaves,
/// plus the stem formula against the structural stem walk.
IdentityReport check_identities(const RootedTree& t);
IdentityReport check_identities(const RootedTree& t, Invariants& inv);

}  // namespace treepoly
