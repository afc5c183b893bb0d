#pragma once

#include <string>
#include <vector>

#include "treepoly/bignum.hpp"
#include "treepoly/multipoly.hpp"

namespace treepoly {

/// Univariate polynomial with exact rational coefficients (index = degree).
/// Coefficients are always in lowest terms; the leading coefficient is
/// nonzero unless the polynomial is zero.
class UniRatPoly {
 public:
  UniRatPoly() = default;  // zero
  explicit UniRatPoly(std::vector<BigRat> coeffs);
  static UniRatPoly constant(BigRat c);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// MultiPoly::kNegInfDegree for the zero polynomial.
  int degree() const noexcept {
    return coeffs_.empty() ? MultiPoly::kNegInfDegree
                           : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of x^k (zero outside the stored range).
  BigRat coeff(int k) const;
  const std::vector<BigRat>& coefficients() const noexcept { return coeffs_; }

  BigRat evaluate(const BigRat& x) const;

  /// Canonical text form, e.g. "1/2*x + 1/2"; rationals print as "p/q"
  /// with q > 0, or "p" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const UniRatPoly& a, const UniRatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniRatPoly& a, const UniRatPoly& b) {
    return !(a == b);
  }

 private:
  std::vector<BigRat> coeffs_;
};

/// Termwise integration of z over [0, 1]: x^a * z^c contributes
/// x^a / (c + 1). The input must be a polynomial in x and z only; a stray
/// y raises DomainError.
UniRatPoly integrate_unit_interval(const MultiPoly& p);

}  // namespace treepoly
