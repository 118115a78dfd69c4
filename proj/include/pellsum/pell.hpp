#pragma once

#include <utility>
#include <vector>

#include "pellsum/quadext.hpp"
#include "pellsum/ratfunc.hpp"
#include "pellsum/rational.hpp"

// Generalized Pell numbers
//
//   2 P(n+2) = 2R P(n+1) + R P(n),   P(0) = 0,  P(1) = 2/R,
//
// and the companion Q(n) = 2P(n+1) - R P(n). The characteristic roots are
// lambda, mu = (R +- W)/2 with W^2 = R^2 + 2R, so lambda + mu = R and
// lambda * mu = -R/2. At R = 2 these are the classical Pell numbers.
//
// Every evaluator is a template over the coefficient field: Rational for a
// numeric R, Sym (= Q(R)) for the indeterminate R.

namespace pellsum {

template <Field F>
struct PellParams {
  F R;

  explicit PellParams(F r) : R(std::move(r)) {
    if (R.is_zero()) throw InvalidInput("R must be nonzero");
    if ((R + F(2)).is_zero()) throw InvalidInput("R must differ from -2");
  }

  F half_r() const { return R / F(2); }
  // The geometric ratio lambda * mu.
  F root_product() const { return -half_r(); }
  F discriminant() const { return R * R + F(2) * R; }
};

inline PellParams<Sym> symbolic_params() { return PellParams<Sym>(Sym::variable()); }

// Iterative evaluation; negative n runs the recurrence backwards,
// P(n) = 2 P(n+2)/R - 2 P(n+1).
template <Field F>
F pell_iter(const PellParams<F>& p, long n) {
  F a(0);          // P(i)
  F b = F(2) / p.R;  // P(i+1)
  if (n >= 0) {
    const F half = p.half_r();
    for (long i = 0; i < n; ++i) {
      F next = p.R * b + half * a;
      a = std::move(b);
      b = std::move(next);
    }
    return a;
  }
  const F two_over_r = F(2) / p.R;
  for (long i = 0; i > n; --i) {
    F prev = two_over_r * b - F(2) * a;
    b = std::move(a);
    a = std::move(prev);
  }
  return a;
}

// P(lo), P(lo+1), ..., P(hi) in one pass. Requires lo <= hi.
template <Field F>
std::vector<F> pell_range(const PellParams<F>& p, long lo, long hi) {
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  F a = pell_iter(p, lo);
  F b = pell_iter(p, lo + 1);
  const F half = p.half_r();
  for (long i = lo; i <= hi; ++i) {
    out.push_back(a);
    F next = p.R * b + half * a;
    a = std::move(b);
    b = std::move(next);
  }
  return out;
}

template <Field F>
F q_pell(const PellParams<F>& p, long n) {
  return F(2) * pell_iter(p, n + 1) - p.R * pell_iter(p, n);
}

// Binary powering of the companion matrix M = [[R, R/2], [1, 0]], which maps
// (P(k+1), P(k)) to (P(k+2), P(k+1)). Powers are kept in the form
// M^N = alpha*M + beta*I (Cayley-Hamilton: M^2 = R*M + (R/2)*I), so a
// squaring costs five field multiplications.
template <Field F>
class CompanionPower {
 public:
  CompanionPower(const PellParams<F>& p, long n) : alpha_(0), beta_(1) {
    if (n < 0) throw InvalidInput("companion power needs n >= 0");
    if (n == 0) return;
    const F half = p.half_r();
    long bit = 1;
    while (bit <= n / 2) bit <<= 1;
    alpha_ = F(1);  // M
    beta_ = F(0);
    for (bit >>= 1; bit > 0; bit >>= 1) {
      F aa = alpha_ * alpha_;
      F new_alpha = alpha_ * (alpha_ * p.R + F(2) * beta_);
      beta_ = aa * half + beta_ * beta_;
      alpha_ = std::move(new_alpha);
      if (n & bit) {
        F shifted = alpha_ * p.R + beta_;
        beta_ = alpha_ * half;
        alpha_ = std::move(shifted);
      }
    }
  }

  const F& alpha() const { return alpha_; }
  const F& beta() const { return beta_; }

 private:
  F alpha_;
  F beta_;
};

// (P(n), P(n+1)) for n >= 0 in O(log n) field multiplications.
// M^n (P(1), P(0)) = (P(n+1), P(n)) and M (P(1), 0) = (2, P(1)).
template <Field F>
std::pair<F, F> pell_fast_pair(const PellParams<F>& p, long n) {
  if (n < 0) throw InvalidInput("pell_fast needs n >= 0");
  if (n == 0) return {F(0), F(2) / p.R};
  CompanionPower<F> mp(p, n);
  const F p1 = F(2) / p.R;
  return {mp.alpha() * p1, mp.alpha() * F(2) + mp.beta() * p1};
}

template <Field F>
F pell_fast(const PellParams<F>& p, long n) {
  return pell_fast_pair(p, n).first;
}

// Binet evaluation inside Q(R)(W), W^2 = R^2 + 2R:
// P(n) = 2/(R W) * (lambda^n - mu^n).
template <Field F>
F pell_binet(const PellParams<F>& p, long n) {
  if (n < 0) throw InvalidInput("pell_binet needs n >= 0");
  const F d = p.discriminant();
  const F half(F(1) / F(2));
  QuadExt<F> lambda(p.half_r(), half, d);
  QuadExt<F> mu(p.half_r(), -half, d);
  QuadExt<F> diff = pow(lambda, n) - pow(mu, n);
  if (!diff.rational_part().is_zero()) {
    throw BinetInconsistency("W-free part of lambda^n - mu^n is " + diff.rational_part().str());
  }
  return F(2) * diff.w_part() / p.R;
}

// Brod's r-Pell numbers P(r, n) = C1 r1^n + C2 r2^n with R = 2^r; they are
// the shift-by-two of P_R.
struct BrodForm {
  long r;
};

Rational brod_convert(const BrodForm& form, long n);

// Brod's closed form evaluated directly in Q(W): C1,2 = 1 +- (R+1)/W and
// r1,2 = (R +- W)/2, with W^2 = 4^r + 2^(r+1). Independent of pell_iter.
Rational brod_direct(const BrodForm& form, long n);

}  // namespace pellsum
