#include "treepoly/multipoly.hpp"

#include <cctype>

#include "treepoly/errors.hpp"

namespace treepoly {

MultiPoly MultiPoly::constant(BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m;
  m.e[static_cast<int>(v)] = 1;
  MultiPoly p;
  p.terms_.emplace(m, 1);
  return p;
}

MultiPoly MultiPoly::monomial(BigInt coeff, std::uint32_t ex, std::uint32_t ey,
                              std::uint32_t ez) {
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace(Monomial{{ex, ey, ez}}, std::move(coeff));
  return p;
}

BigInt MultiPoly::constant_value() const {
  if (is_zero()) return 0;
  if (!is_constant()) {
    throw DomainError("constant_value: polynomial is not constant: " + str());
  }
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly acc = one();
  for (std::uint32_t i = 0; i < k; ++i) acc *= *this;
  return acc;
}

MultiPoly MultiPoly::substituted(
    const std::vector<std::pair<Var, MultiPoly>>& assignment) const {
  const MultiPoly* image[3] = {nullptr, nullptr, nullptr};
  for (const auto& [v, p] : assignment) image[static_cast<int>(v)] = &p;

  // Power tables for the assigned variables, filled on demand.
  std::vector<MultiPoly> powers[3];
  auto power_of = [&](int v, std::uint32_t k) -> const MultiPoly& {
    auto& table = powers[v];
    if (table.empty()) table.push_back(one());
    while (table.size() <= k) table.push_back(table.back() * *image[v]);
    return table[k];
  };

  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    MultiPoly term = constant(c);
    bool trivial = true;
    for (int v = 0; v < 3; ++v) {
      if (m.e[v] == 0) continue;
      if (image[v] == nullptr) {
        kept.e[v] = m.e[v];
      } else {
        term *= power_of(v, m.e[v]);
        trivial = false;
      }
    }
    if (trivial) {
      out.add_term(m, c);
    } else {
      out += term * monomial(1, kept.e[0], kept.e[1], kept.e[2]);
    }
  }
  return out;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const int i = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.e[i] == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    out.add_term(d, c * m.e[i]);
  }
  return out;
}

int MultiPoly::degree(Var v) const {
  if (is_zero()) return kNegInfDegree;
  const int i = static_cast<int>(v);
  std::uint32_t best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.e[i]);
  return static_cast<int>(best);
}

MultiPoly MultiPoly::coefficient_of(Var v, std::uint32_t k) const {
  const int i = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.e[i] != k) continue;
    Monomial d = m;
    d.e[i] = 0;
    out.terms_.emplace(d, c);
  }
  return out;
}

MultiPoly MultiPoly::divided_by(Var v) const {
  const int i = static_cast<int>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.e[i] == 0) {
      throw DomainError(std::string("divided_by: term not divisible by ") +
                        var_name(v) + " in " + str());
    }
    Monomial d = m;
    d.e[i] -= 1;
    out.terms_.emplace(d, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    BigInt mag = negative ? BigInt(-c) : c;
    std::string factors;
    for (int v = 0; v < 3; ++v) {
      if (m.e[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "xyz"[v];
      if (m.e[v] > 1) factors += "^" + std::to_string(m.e[v]);
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  }
  return out;
}

namespace {

struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  BigInt read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", start);
    return BigInt(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  PolyLexer lx{text};
  if (lx.eof()) throw ParseError("empty polynomial", lx.pos);

  MultiPoly out;
  bool first_term = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++lx.pos;
    } else if (!first_term) {
      throw ParseError("expected '+' or '-' between terms", lx.pos);
    }
    first_term = false;

    lx.skip_ws();
    BigInt coeff = 1;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coeff = lx.read_integer();
      saw_anything = true;
    }
    Monomial m;
    // A '*' may follow an explicit coefficient; between variable factors it
    // is mandatory ("2x" parses, "x y" does not).
    bool must_factor = false;
    if (saw_anything && lx.peek() == '*') {
      ++lx.pos;
      must_factor = true;
    }
    while (true) {
      const char f = lx.peek();
      int v;
      if (f == 'x') {
        v = 0;
      } else if (f == 'y') {
        v = 1;
      } else if (f == 'z') {
        v = 2;
      } else {
        if (must_factor) throw ParseError("expected a variable", lx.pos);
        break;
      }
      ++lx.pos;
      saw_anything = true;
      must_factor = false;
      std::uint32_t exp = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        BigInt e = lx.read_integer();
        if (e > 1'000'000) throw ParseError("exponent out of range", lx.pos);
        exp = static_cast<std::uint32_t>(e);
      }
      m.e[v] += exp;
      if (lx.peek() == '*') {
        ++lx.pos;
        must_factor = true;
      } else {
        break;
      }
    }
    if (!saw_anything) throw ParseError("expected a term", lx.pos);
    out.add_term(m, sign < 0 ? BigInt(-coeff) : coeff);
  }
  return out;
}

BigRat evaluate(const MultiPoly& p, const BigRat& x, const BigRat& y,
                const BigRat& z) {
  auto pow_rat = [](const BigRat& base, std::uint32_t k) {
    BigRat acc = 1;
    for (std::uint32_t i = 0; i < k; ++i) acc *= base;
    return acc;
  };
  BigRat total = 0;
  for (const auto& [m, c] : p.terms()) {
    total += BigRat(c) * pow_rat(x, m.e[0]) * pow_rat(y, m.e[1]) *
             pow_rat(z, m.e[2]);
  }
  return total;
}

}  // namespace treepoly
