#pragma once

#include <string>

#include "pellsum/poly.hpp"
#include "pellsum/rational.hpp"

namespace pellsum {

// Element num/den of the fraction field F(x), kept reduced: gcd(num, den) = 1
// and den monic. Equality is therefore structural.
template <Field F>
class RatFunc {
 public:
  RatFunc() : den_(F(1)) {}
  RatFunc(long v) : num_(F(v)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const F& constant) : num_(constant), den_(F(1)) {}
  explicit RatFunc(Poly<F> p) : num_(std::move(p)), den_(F(1)) {}
  RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
  }

  static RatFunc variable() { return RatFunc(Poly<F>::x()); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const { return raw(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_);
    // Cross cancellation keeps the operands of the final gcd small.
    Poly<F> g1 = gcd(a.num_, b.den_);
    Poly<F> g2 = gcd(b.num_, a.den_);
    Poly<F> n1 = g1.is_one() ? a.num_ : divrem(a.num_, g1).first;
    Poly<F> d2 = g1.is_one() ? b.den_ : divrem(b.den_, g1).first;
    Poly<F> n2 = g2.is_one() ? b.num_ : divrem(b.num_, g2).first;
    Poly<F> d1 = g2.is_one() ? a.den_ : divrem(a.den_, g2).first;
    return normalized(n1 * n2, d1 * d2);
  }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero();
    return normalized(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Value at x. Throws DegenerateDenominator when den(x) = 0.
  F eval(const F& x) const {
    F d = den_.eval(x);
    if (d.is_zero()) {
      throw DegenerateDenominator("denominator " + den_.str() + " vanishes at " + x.str());
    }
    return num_.eval(x) / d;
  }

  // Constant term of a constant function.
  F constant_value() const { return num_.coeff(0) / den_.coeff(0); }

  // "num" or "num/den", each as a coefficient list.
  std::string str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  static RatFunc raw(Poly<F> n, Poly<F> d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  // Coprime inputs; only the leading coefficient needs normalizing.
  static RatFunc normalized(Poly<F> n, Poly<F> d) {
    if (n.is_zero()) return RatFunc();
    if (!(d.lead() == F(1))) {
      F s = F(1) / d.lead();
      n = n.scaled(s);
      d = d.scaled(s);
    }
    return raw(std::move(n), std::move(d));
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly<F>(F(1));
      return;
    }
    if (!den_.is_constant()) {
      Poly<F> g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
      }
    }
    *this = normalized(std::move(num_), std::move(den_));
  }

  Poly<F> num_;
  Poly<F> den_;
};

template <Field F>
RatFunc<F> pow(const RatFunc<F>& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  RatFunc<F> result(1);
  RatFunc<F> base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// Q(R): exact rational functions in the indeterminate R.
using Sym = RatFunc<Rational>;

}  // namespace pellsum
