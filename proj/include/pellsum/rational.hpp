#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pellsum {

// Counts bigint multiplications and divisions on the calling thread: products
// where neither operand is a word-sized integer. Scaling by a small integer
// constant is linear time and is not counted.
namespace opcount {
std::uint64_t multiplications();
void reset();
void add(std::uint64_t k = 1);
}  // namespace opcount

// Arbitrary precision rational number, always in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "-p" or "p/q" with q > 0. No whitespace, no decimal point.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;

  // "p/q", or "p" when q = 1.
  std::string str() const;

 private:
  mpq_class v_;
};

// Binary powering; negative exponents require x != 0.
Rational pow(const Rational& x, long e);

// Exact binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
Rational binomial(long n, long k);

}  // namespace pellsum
