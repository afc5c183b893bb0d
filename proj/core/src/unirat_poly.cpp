#include "treepoly/unirat_poly.hpp"

#include <utility>

#include "treepoly/errors.hpp"

namespace treepoly {

UniRatPoly::UniRatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniRatPoly UniRatPoly::constant(BigRat c) {
  std::vector<BigRat> v;
  if (c != 0) v.push_back(std::move(c));
  return UniRatPoly(std::move(v));
}

BigRat UniRatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

BigRat UniRatPoly::evaluate(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

namespace {

std::string rational_str(const BigRat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

}  // namespace

std::string UniRatPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const BigRat& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    BigRat mag = negative ? BigRat(-c) : c;
    if (k == 0) {
      out += rational_str(mag);
    } else {
      std::string var = (k == 1) ? "x" : "x^" + std::to_string(k);
      out += (mag == 1) ? var : rational_str(mag) + "*" + var;
    }
  }
  return out;
}

UniRatPoly integrate_unit_interval(const MultiPoly& p) {
  if (p.degree(Var::y) > 0) {
    throw DomainError(
        "integrate_unit_interval: input still contains the variable y: " +
        p.str());
  }
  std::vector<BigRat> coeffs;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t a = m.e[0];
    if (a >= coeffs.size()) coeffs.resize(a + 1, BigRat(0));
    coeffs[a] += BigRat(c) / BigRat(m.e[2] + 1);
  }
  return UniRatPoly(std::move(coeffs));
}

}  // namespace treepoly
