#pragma once

#include <string>

#include "pellsum/poly.hpp"

namespace pellsum {

// a + b*W with W^2 = D. D travels with the value so that numeric and
// symbolic instantiations can coexist.
template <Field F>
class QuadExt {
 public:
  QuadExt(F a, F b, F discriminant) : a_(std::move(a)), b_(std::move(b)), d_(std::move(discriminant)) {}

  static QuadExt one(const F& discriminant) { return QuadExt(F(1), F(0), discriminant); }

  const F& rational_part() const { return a_; }
  const F& w_part() const { return b_; }
  const F& discriminant() const { return d_; }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
  }
  // (a + bW)(c + dW) = (ac + bdD) + (ad + bc)W
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  std::string str() const { return a_.str() + " + (" + b_.str() + ")*W"; }

 private:
  F a_;
  F b_;
  F d_;
};

template <Field F>
QuadExt<F> pow(const QuadExt<F>& x, long n) {
  if (n < 0) throw InvalidInput("QuadExt power needs n >= 0");
  QuadExt<F> result = QuadExt<F>::one(x.discriminant());
  QuadExt<F> base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace pellsum
