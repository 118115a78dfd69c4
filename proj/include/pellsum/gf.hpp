#pragma once

#include <algorithm>
#include <vector>

#include "pellsum/pell.hpp"

namespace pellsum {

// G(z) = (n0 + n1 z) / (b + c z + d z^2), the generating function of
// u_k = P(stride*k + shift).
template <Field F>
struct LinearGF {
  PellParams<F> params;
  long stride;
  long shift;
  F n0, n1, b, c, d;
};

namespace detail {

template <Field F>
F pell_any(const PellParams<F>& p, long n) {
  return n >= 0 ? pell_fast(p, n) : pell_iter(p, n);
}

// Denominator b + c z + d z^2 of the stride-m subsequence:
// b = 2^m, c = -(R(R+1) 2^(m-1) P(m) - R^2 2^(m-2) P(m-2)), d = (-R)^m.
template <Field F>
void subsequence_denominator(const PellParams<F>& p, long m, F& b, F& c, F& d) {
  const F two(2);
  const F& R = p.R;
  b = pow(two, m);
  c = -(R * (R + F(1)) * pow(two, m - 1) * pell_any(p, m) - R * R * pow(two, m - 2) * pell_any(p, m - 2));
  d = pow(-R, m);
}

}  // namespace detail

template <Field F>
LinearGF<F> subsequence_gf(const PellParams<F>& p, long m) {
  if (m < 1) throw InvalidInput("subsequence_gf needs m >= 1");
  LinearGF<F> g{p, m, 0, F(0), F(0), F(0), F(0), F(0)};
  detail::subsequence_denominator(p, m, g.b, g.c, g.d);
  g.n1 = g.b * detail::pell_any(p, m);
  return g;
}

// u_k = P(A k + B); same denominator as the stride-A subsequence.
template <Field F>
LinearGF<F> shifted_subsequence_gf(const PellParams<F>& p, long stride, long shift) {
  if (stride < 1) throw InvalidInput("shifted_subsequence_gf needs stride >= 1");
  LinearGF<F> g{p, stride, shift, F(0), F(0), F(0), F(0), F(0)};
  detail::subsequence_denominator(p, stride, g.b, g.c, g.d);
  const F u0 = detail::pell_any(p, shift);
  g.n0 = g.b * u0;
  g.n1 = g.b * detail::pell_any(p, stride + shift) + g.c * u0;
  return g;
}

// u_0 .. u_N from b u_{k+2} = -c u_{k+1} - d u_k.
template <Field F>
std::vector<F> gf_series(const LinearGF<F>& g, long N) {
  if (N < 0) throw InvalidInput("gf_series needs N >= 0");
  std::vector<F> u;
  u.reserve(static_cast<std::size_t>(N) + 1);
  u.push_back(g.n0 / g.b);
  if (N >= 1) u.push_back((g.n1 - g.c * u[0]) / g.b);
  for (long k = 2; k <= N; ++k) {
    const auto i = static_cast<std::size_t>(k);
    u.push_back(-(g.c * u[i - 1] + g.d * u[i - 2]) / g.b);
  }
  return u;
}

template <Field F>
struct WeightedSum {
  F value;
  // b + c*sigma + d*sigma^2 vanished and the sum was accumulated directly.
  bool resonance = false;
};

// sum_{k=0}^{n} sigma^k u_k by direct accumulation over the recurrence.
template <Field F>
F weighted_partial_sum_direct(const LinearGF<F>& g, const F& sigma, long n) {
  auto u = gf_series(g, n);
  F acc(0);
  F w(1);
  for (const auto& v : u) {
    acc = acc + w * v;
    w = w * sigma;
  }
  return acc;
}

// S_n(sigma) = sum_{k=0}^{n} sigma^k u_k
//            = [n0 + sigma n1 - sigma^(n+1) b u_{n+1} + sigma^(n+2) d u_n]
//              / (b + c sigma + d sigma^2)
// with u_n, u_{n+1} from the fast evaluator.
template <Field F>
WeightedSum<F> weighted_partial_sum(const LinearGF<F>& g, const F& sigma, long n) {
  if (n < 0) throw InvalidInput("weighted_partial_sum needs n >= 0");
  const F denom = g.b + sigma * (g.c + sigma * g.d);
  if (denom.is_zero()) return {weighted_partial_sum_direct(g, sigma, n), true};
  if (sigma.is_zero()) return {g.n0 / g.b, false};

  const PellParams<F>& p = g.params;
  const long idx = g.stride * n + g.shift;
  F un(0), un1(0);
  if (idx >= 0) {
    // (P(idx), P(idx+1)) stepped forward to P(idx + stride).
    auto [a, b] = pell_fast_pair(p, idx);
    un = a;
    const F half = p.half_r();
    for (long i = 1; i < g.stride; ++i) {
      F next = p.R * b + half * a;
      a = std::move(b);
      b = std::move(next);
    }
    un1 = std::move(b);
  } else {
    un = pell_iter(p, idx);
    un1 = detail::pell_any(p, idx + g.stride);
  }
  const F sn1 = pow(sigma, n + 1);
  const F num = g.n0 + sigma * g.n1 - sn1 * g.b * un1 + sn1 * sigma * g.d * un;
  return {num / denom, false};
}

// a/(b+c+d) + (b u_{n+1} + d u_n)/(b+c+d) for an unshifted subsequence
// (n0 = 0, a = n1): the sigma = 1 sum with the sign of the tail flipped.
// It does not equal the partial sum; kept to demonstrate that.
template <Field F>
F partial_sum_flipped_tail(const LinearGF<F>& g, long n) {
  const F denom = g.b + g.c + g.d;
  const F un = detail::pell_any(g.params, g.stride * n + g.shift);
  const F un1 = detail::pell_any(g.params, g.stride * (n + 1) + g.shift);
  return g.n1 / denom + (g.b * un1 + g.d * un) / denom;
}

// Checks 2^m P((n+2)m) - (R(R+1) 2^(m-1) P(m) - R^2 2^(m-2) P(m-2)) P((n+1)m)
//        + (-1)^m R^m P(nm) = 0 for 0 <= n <= n_max.
template <Field F>
bool subsequence_recurrence_check(const PellParams<F>& p, long m, long n_max) {
  if (m < 1) throw InvalidInput("subsequence_recurrence_check needs m >= 1");
  const long lo = std::min(0L, m - 2);
  const auto vals = pell_range(p, lo, (n_max + 2) * m);
  auto P = [&](long i) -> const F& { return vals[static_cast<std::size_t>(i - lo)]; };
  const F two(2);
  const F& R = p.R;
  const F b = pow(two, m);
  const F coeff = R * (R + F(1)) * pow(two, m - 1) * P(m) - R * R * pow(two, m - 2) * P(m - 2);
  const F d = pow(-R, m);
  for (long n = 0; n <= n_max; ++n) {
    if (!(b * P((n + 2) * m) - coeff * P((n + 1) * m) + d * P(n * m)).is_zero()) return false;
  }
  return true;
}

}  // namespace pellsum
