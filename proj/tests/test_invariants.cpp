#include "treepoly/invariants.hpp"

#include "doctest.h"
#include "treepoly/enumeration.hpp"
#include "treepoly/errors.hpp"

using namespace treepoly;

namespace {

RootedTree path(int n) {
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

RootedTree star(int n) { return RootedTree(std::vector<RootedTree>(n - 1)); }

const MultiPoly kOne = MultiPoly::one();
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);
const MultiPoly Z = MultiPoly::variable(Var::z);

BigInt binomial(int n, int k) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("P on paths, stars and forests") {
  Invariants inv;
  CHECK(inv.P(RootedTree{}) == kOne + X * Y);
  for (int n = 2; n <= 7; ++n) {
    CHECK(inv.P(path(n)) == kOne + X.pow(n) * Y);
  }
  for (int n = 1; n <= 6; ++n) {
    MultiPoly expected = kOne;
    for (int k = 1; k <= n; ++k) {
      expected += MultiPoly::monomial(binomial(n, k), k + 1, k, 0);
    }
    CHECK(inv.P(star(n + 1)) == expected);
  }
  CHECK(inv.P(RootedForest{}) == kOne);
  CHECK(inv.P(remove_root(star(3))) == (kOne + X * Y) * (kOne + X * Y));
}

TEST_CASE("p on small trees, both routes") {
  Invariants inv;
  CHECK(inv.p(RootedTree{}) == X);
  for (int n = 2; n <= 7; ++n) CHECK(inv.p(path(n)) == X.pow(n));
  CHECK(inv.p(star(3)) == MultiPoly::parse("2x^2 - x^3"));

  for (int n = 1; n <= 8; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      CHECK(p_from_P(inv.P(*t)) == inv.p(*t));
    }
  }
}

TEST_CASE("S and A on paths, stars and the fixed examples") {
  Invariants inv;
  CHECK(inv.S(RootedTree{}) == Y + X);
  CHECK(inv.A(RootedTree{}) == Y);

  for (int n = 2; n <= 7; ++n) {
    MultiPoly geom;
    for (int k = 0; k < n; ++k) geom += X.pow(k);
    CHECK(inv.A(path(n)) == Y * geom);
    CHECK(inv.S(path(n)) == inv.A(path(n)) + X.pow(n));
  }
  for (int n = 2; n <= 6; ++n) {
    CHECK(inv.A(star(n + 1)) == Y + X * Y.pow(n));
    CHECK(inv.S(star(n + 1)) == Y + X * (X + Y).pow(n));
  }

  CHECK(inv.S(path(2)) == MultiPoly::parse("y + x*y + x^2"));
  CHECK(inv.A(path(2)) == MultiPoly::parse("y + x*y"));

  // forests: products over components; empty forest -> 1
  CHECK(inv.S(RootedForest{}) == kOne);
  CHECK(inv.A(RootedForest{}) == kOne);
  CHECK(inv.S(remove_root(star(3))) == (Y + X) * (Y + X));
}

TEST_CASE("brute-force S and A agree with hand enumeration") {
  CHECK(brute_S(path(2)) == MultiPoly::parse("y + x*y + x^2"));
  CHECK(brute_A(path(2)) == MultiPoly::parse("y + x*y"));
  CHECK(brute_S(RootedTree{}) == Y + X);
  CHECK(brute_A(RootedTree{}) == Y);
}

TEST_CASE("brute-force P agrees with hand enumeration") {
  CHECK(brute_P(RootedTree{}) == kOne + X * Y);
  CHECK(brute_P(star(3)) == MultiPoly::parse("1 + 2x^2*y + x^3*y^2"));
  CHECK(brute_P(RootedForest{}) == kOne);
}

TEST_CASE("oracle equivalence sweep at unit scale") {
  Invariants inv;
  for (int n = 1; n <= 7; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      CHECK(inv.P(*t) == brute_P(*t));
      CHECK(inv.S(*t) == brute_S(*t));
      CHECK(inv.A(*t) == brute_A(*t));
      CHECK(inv.M(*t) == brute_M(*t));
    }
  }
  for (int n = 0; n <= 6; ++n) {
    ForestStream stream(n);
    while (auto f = stream.next()) {
      CHECK(inv.P(*f) == brute_P(*f));
    }
  }
}

TEST_CASE("brute-force bounds are enforced") {
  CHECK_THROWS_AS(brute_S(path(21)), DomainError);
  CHECK_THROWS_AS(brute_A(path(21)), DomainError);
  CHECK_THROWS_AS(brute_M(path(17)), DomainError);
  CHECK_THROWS_AS(brute_P(RootedForest(std::vector<RootedTree>(31))),
                  DomainError);
}

TEST_CASE("M on the fixed examples") {
  Invariants inv;
  CHECK(inv.M(RootedTree{}) == kOne);
  CHECK(inv.M(path(2)) == Z + X);
  CHECK(inv.M(star(3)) == MultiPoly::parse("2z - z^2 + 2x*y"));

  CHECK(brute_M(RootedTree{}) == kOne);
  CHECK(brute_M(path(2)) == Z + X);
  CHECK(brute_M(star(3)) == MultiPoly::parse("2z - z^2 + 2x*y"));
}

TEST_CASE("separation-size PGF on the fixed examples") {
  Invariants inv;
  CHECK(inv.pgf(RootedTree{}) == UniRatPoly::constant(1));
  CHECK(inv.pgf(path(2)) == UniRatPoly({BigRat(1, 2), BigRat(1, 2)}));
  CHECK(inv.pgf(star(3)) == UniRatPoly({BigRat(2, 3), BigRat(1, 3)}));
  CHECK(inv.pgf(path(3)) ==
        UniRatPoly({BigRat(1, 3), BigRat(1, 3), BigRat(1, 3)}));
}

TEST_CASE("PGF normalization at x = 1") {
  Invariants inv;
  for (int n = 1; n <= 8; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      CHECK(inv.pgf(*t).evaluate(1) == BigRat(1));
    }
  }
}

TEST_CASE("stem read off P") {
  Invariants inv;
  CHECK(stem_from_P(inv.P(path(3))) == 3);
  CHECK(stem_from_P(inv.P(star(3))) == 1);
  CHECK(stem_from_P(inv.P(remove_root(star(3)))) == 0);  // (1+xy)^2
  CHECK(stem_from_P(inv.P(RootedForest{})) == 0);

  for (int n = 0; n <= 8; ++n) {
    ForestStream stream(n);
    while (auto f = stream.next()) {
      CHECK(stem_from_P(inv.P(*f)) == tree_stats(*f).stem_length);
    }
  }
}

TEST_CASE("Eisenstein-shape check separates trees from bigger forests") {
  CHECK(eisenstein_check(path(2)));
  CHECK(eisenstein_check(star(3)));
  CHECK_FALSE(eisenstein_check(remove_root(star(3))));  // {., .}
  CHECK_FALSE(eisenstein_check(RootedForest{}));

  for (int n = 1; n <= 8; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) CHECK(eisenstein_check(*t));
  }
  for (int n = 2; n <= 8; ++n) {
    ForestStream stream(n);
    while (auto f = stream.next()) {
      if (f->component_count() >= 2) CHECK_FALSE(eisenstein_check(*f));
    }
  }
}

TEST_CASE("identity suite on hand examples and small sweep") {
  // path2: M(x,y,1) = 1 + x = d/dy (y + x*y)
  Invariants inv;
  CHECK(inv.M(path(2)).substituted({{Var::z, kOne}}) == kOne + X);
  // cherry: A(x,1-x) = (1-x) + x(1-x)^2 = 1 - p
  const MultiPoly lhs = inv.A(star(3)).substituted({{Var::y, kOne - X}});
  CHECK(lhs == kOne - inv.p(star(3)));
  CHECK(lhs == MultiPoly::parse("1 - 2x^2 + x^3"));

  CHECK(check_identities(RootedTree{}).all_pass());
  for (int n = 1; n <= 8; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      const IdentityReport report = check_identities(*t, inv);
      CHECK(report.checks.size() == 7);
      CHECK(report.all_pass());
    }
  }
}

TEST_CASE("A specialized at y = 0 vanishes") {
  Invariants inv;
  for (int n = 1; n <= 7; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      CHECK(inv.A(*t).substituted({{Var::y, MultiPoly{}}}).is_zero());
    }
  }
}

TEST_CASE("identity report carries witnesses on failure") {
  // Feed the checker a corrupted polynomial by hand: compare against what
  // check_identities would have used.
  Invariants inv;
  const RootedTree cherry = star(3);
  IdentityReport report = check_identities(cherry, inv);
  CHECK(report.all_pass());
  for (const IdentityCheck& c : report.checks) {
    CHECK(c.lhs.empty());
    CHECK(c.rhs.empty());
  }
}
