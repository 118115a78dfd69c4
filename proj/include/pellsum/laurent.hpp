#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pellsum/rational.hpp"

namespace pellsum {

// Finite Laurent polynomial sum c_k x^k over an exponent window
// [low, low + size). The window is trimmed so both end coefficients are
// nonzero; zero has an empty window.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long low, std::vector<Rational> coeffs);

  // c * x^k
  static LaurentPoly monomial(const Rational& c, long k);
  static LaurentPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  // Highest exponent; meaningless for zero.
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  Rational coeff(long k) const;
  bool is_monomial() const { return c_.size() == 1; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  // Only division by a monomial is defined.
  friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // x -> 1/x
  LaurentPoly reflected() const;

  // e.g. "x^2 - 2 + x^-2"
  std::string str() const;

 private:
  void trim();

  long low_ = 0;
  std::vector<Rational> c_;
};

LaurentPoly pow(const LaurentPoly& p, long e);

// Expands an expression in x built from integers, + - * / ^ and parentheses,
// e.g. "(x+x^-1)*(2*(x-x^-1)+(x-x^-1)^3)".
LaurentPoly laurent_expand(std::string_view expr);

}  // namespace pellsum
