#include "pellsum/laurent.hpp"

#include <algorithm>

#include "pellsum/errors.hpp"
#include "pellsum/expr.hpp"

namespace pellsum {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(long low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long k) { return LaurentPoly(k, {c}); }

Rational LaurentPoly::coeff(long k) const {
  if (c_.empty() || k < low_ || k > high()) return Rational(0);
  return c_[static_cast<std::size_t>(k - low_)];
}

void LaurentPoly::trim() {
  auto first = std::find_if(c_.begin(), c_.end(), [](const Rational& v) { return !v.is_zero(); });
  if (first == c_.end()) {
    c_.clear();
    low_ = 0;
    return;
  }
  low_ += first - c_.begin();
  c_.erase(c_.begin(), first);
  while (c_.back().is_zero()) c_.pop_back();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long low = std::min(a.low(), b.low());
  long high = std::max(a.high(), b.high());
  std::vector<Rational> c(static_cast<std::size_t>(high - low + 1));
  for (long k = low; k <= high; ++k) c[static_cast<std::size_t>(k - low)] = a.coeff(k) + b.coeff(k);
  return LaurentPoly(low, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!b.is_monomial()) throw InvalidInput("Laurent division only by a monomial");
  LaurentPoly r = a;
  r.low_ -= b.low_;
  for (auto& v : r.c_) v /= b.c_[0];
  if (r.is_zero()) r.low_ = 0;
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return *this;
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return LaurentPoly(-high(), std::move(c));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (long k = high(); k >= low_; --k) {
    Rational v = coeff(k);
    if (v.is_zero()) continue;
    bool neg = v.sign() < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rational mag = neg ? -v : v;
    if (k == 0) {
      s += mag.str();
      continue;
    }
    if (!mag.is_one()) s += mag.str() + "*";
    s += "x";
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

LaurentPoly pow(const LaurentPoly& p, long e) {
  if (e < 0) {
    if (!p.is_monomial()) throw InvalidInput("negative power of a non-monomial Laurent polynomial");
    return LaurentPoly(1) / pow(p, -e);
  }
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly laurent_expand(std::string_view expr) {
  ExprReader<LaurentPoly> reader(expr, [](std::string_view id) -> LaurentPoly {
    if (id == "x") return LaurentPoly::x();
    throw InvalidInput("unknown identifier '" + std::string(id) + "'");
  });
  return reader.parse();
}

}  // namespace pellsum
