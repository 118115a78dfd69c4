#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "pellsum/errors.hpp"

namespace pellsum {

// What the templates below need from a coefficient field. Satisfied by
// Rational and by RatFunc<Rational>.
template <class F>
concept Field = requires(const F a, const F b, long k) {
  F(k);
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

// Dense univariate polynomial; coefficient i multiplies x^i. The leading
// coefficient is never zero, so the zero polynomial has no coefficients.
template <Field F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(const F& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }

  // c * x^k
  static Poly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& lead() const { return c_.back(); }

  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }

  Poly scaled(const F& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly monic() const {
    if (is_zero() || lead() == F(1)) return *this;
    return scaled(F(1) / lead());
  }

  // Applies f to every coefficient; used to specialize polynomials whose
  // coefficients are themselves functions of a parameter.
  template <class Fn>
  auto map(Fn&& f) const {
    using G = decltype(f(std::declval<const F&>()));
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return Poly<G>(std::move(out));
  }

  // "[c0, c1, ...]", lowest degree first. Zero is "[]".
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

// p = q * quotient + remainder, deg remainder < deg q.
template <Field F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& p, const Poly<F>& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.degree() < q.degree()) return {Poly<F>(), p};
  std::vector<F> rem = p.coeffs();
  std::vector<F> quo(static_cast<std::size_t>(p.degree() - q.degree() + 1), F(0));
  const auto& qc = q.coeffs();
  const F inv_lead = F(1) / q.lead();
  const std::size_t dq = qc.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const F& top = rem[k + dq];
    if (top.is_zero()) continue;
    F t = top * inv_lead;
    for (std::size_t i = 0; i <= dq; ++i) {
      if (qc[i].is_zero()) continue;
      rem[k + i] = rem[k + i] - t * qc[i];
    }
    quo[k] = std::move(t);
  }
  rem.resize(dq);
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

// Monic gcd by the Euclidean algorithm. gcd(0, 0) is 0.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace pellsum
