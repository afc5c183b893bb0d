#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treepoly/bignum.hpp"

namespace treepoly {

enum class Var : int { x = 0, y = 1, z = 2 };

inline char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

struct Monomial {
  std::array<std::uint32_t, 3> e{0, 0, 0};

  std::uint64_t total_degree() const {
    return std::uint64_t(e[0]) + e[1] + e[2];
  }
  std::uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending total degree, ties broken by the
/// descending (x, y, z) exponent triple. Map iteration therefore matches
/// the serialized order.
struct TermBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

/// Sparse polynomial in x, y, z with exact integer coefficients. No zero
/// coefficient is ever stored; the zero polynomial has an empty term map.
/// All operations are pure; values are immutable once built and safe to
/// share across threads.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, TermBefore>;

  MultiPoly() = default;  // zero

  static MultiPoly constant(BigInt c);
  static MultiPoly one() { return constant(1); }
  static MultiPoly variable(Var v);
  static MultiPoly monomial(BigInt coeff, std::uint32_t ex, std::uint32_t ey,
                            std::uint32_t ez);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  /// The value of a constant polynomial; throws DomainError otherwise.
  BigInt constant_value() const;

  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  MultiPoly operator-() const;

  MultiPoly pow(std::uint32_t k) const;

  /// Simultaneous substitution of polynomials for a subset of the
  /// variables; unassigned variables stay themselves.
  MultiPoly substituted(
      const std::vector<std::pair<Var, MultiPoly>>& assignment) const;

  /// Formal partial derivative.
  MultiPoly derivative(Var v) const;

  /// Degree in one variable. The zero polynomial reports kNegInfDegree, a
  /// sentinel strictly below every attainable degree (never -1).
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();
  int degree(Var v) const;

  /// The polynomial coefficient of v^k.
  MultiPoly coefficient_of(Var v, std::uint32_t k) const;

  /// Exact division by the variable v; throws DomainError if some term
  /// does not contain v.
  MultiPoly divided_by(Var v) const;

  /// Canonical text form, e.g. "x^3*y^2 + 2*x^2*y + 1"; "0" when zero.
  std::string str() const;

  /// Inverse of str(). Also accepts redundant whitespace, a leading sign,
  /// and an implicit '*' between a coefficient and a variable. Malformed
  /// input raises ParseError with the offending byte offset.
  static MultiPoly parse(std::string_view text);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

 private:
  void add_term(const Monomial& m, const BigInt& c);

  TermMap terms_;
};

/// Exact evaluation at a rational point.
BigRat evaluate(const MultiPoly& p, const BigRat& x, const BigRat& y,
                const BigRat& z);

}  // namespace treepoly
