#include "pellsum/rational.hpp"

#include <cctype>

#include "pellsum/errors.hpp"

namespace pellsum {

namespace opcount {
namespace {
thread_local std::uint64_t g_mults = 0;
}
std::uint64_t multiplications() { return g_mults; }
void reset() { g_mults = 0; }
void add(std::uint64_t k) { g_mults += k; }
}  // namespace opcount

namespace {
bool word_integer(const mpq_class& v) { return v.get_den() == 1 && v.get_num().fits_slong_p(); }
void count_product(const mpq_class& a, const mpq_class& b) {
  if (!word_integer(a) && !word_integer(b)) opcount::add();
}
}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("not an exact rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  count_product(v_, o.v_);
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  count_product(v_, o.v_);
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational pow(const Rational& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  if (e == 0) return Rational(1);
  if (x.is_zero() || x.is_one()) return x;
  if (x == Rational(-1)) return (e % 2 == 0) ? Rational(1) : x;
  Rational result(1);
  Rational base = x;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      if (first) {
        result = base;
        first = false;
      } else {
        result *= base;
      }
    }
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace pellsum
