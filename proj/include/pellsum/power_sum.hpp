#pragma once

#include <string>
#include <vector>

#include "pellsum/gf.hpp"
#include "pellsum/linearizer.hpp"
#include "pellsum/report.hpp"

// Sums S(n) = sum_{k=0}^{n} P(m k)^ell. Throughout, m is the stride and ell
// the exponent.

namespace pellsum {

template <Field F>
struct PowerSumRequest {
  PellParams<F> params;
  long m = 1;
  long ell = 1;
  long n = 0;
};

template <Field F>
struct PowerSumResult {
  F value;
  long weighted_sum_calls = 0;
  long resonances = 0;
};

namespace detail {

template <Field F>
void validate(const PowerSumRequest<F>& req) {
  if (req.m < 1) throw InvalidInput("power sum needs m >= 1");
  if (req.ell < 1) throw InvalidInput("power sum needs ell >= 1");
  if (req.n < 0) throw InvalidInput("power sum needs n >= 0");
}

inline void require_positive(const PellParams<Rational>& p) {
  if (p.R.sign() <= 0) throw InvalidInput("closed-form power sums need R > 0");
}
inline void require_positive(const PellParams<Sym>&) {}

}  // namespace detail

// Linearize P(n)^ell, substitute n -> m k and sum each term with
// weighted_partial_sum: a term P(K n + B) (-R/2)^(j n) becomes
// u_k = P(K m k + B) with weight sigma = (-R/2)^(j m).
template <Field F>
PowerSumResult<F> power_sum_closed(const PowerSumRequest<F>& req, const LinearizedForm& form) {
  detail::validate(req);
  detail::require_positive(req.params);
  if (form.ell != req.ell) throw InvalidInput("linearized form does not match ell");
  const auto& p = req.params;
  check_nondegenerate(form, p);
  const F ratio = p.root_product();
  PowerSumResult<F> out{F(0), 0, 0};
  for (const auto& t : form.terms) {
    const F sigma = pow(ratio, t.geo_j * req.m);
    const F coeff = coeff_at(t.coeff, p);
    F part(0);
    if (t.kind == TermKind::constant_term) {
      if (sigma == F(1)) {
        part = F(req.n + 1);
      } else {
        part = (F(1) - pow(sigma, req.n + 1)) / (F(1) - sigma);
      }
    } else {
      auto gf = shifted_subsequence_gf(p, t.stride * req.m, t.shift);
      auto ws = weighted_partial_sum(gf, sigma, req.n);
      ++out.weighted_sum_calls;
      out.resonances += ws.resonance;
      part = ws.value;
    }
    out.value = out.value + coeff * part;
  }
  return out;
}

template <Field F>
PowerSumResult<F> power_sum_closed(const PowerSumRequest<F>& req) {
  detail::validate(req);
  return power_sum_closed(req, linearize(req.ell));
}

// Direct accumulation over the iterated sequence.
template <Field F>
F power_sum_brute(const PowerSumRequest<F>& req) {
  detail::validate(req);
  const auto& p = req.params;
  const F half = p.half_r();
  F a(0);            // P(i)
  F b = F(2) / p.R;  // P(i+1)
  F acc(0);
  for (long k = 0; k <= req.n; ++k) {
    if (k > 0) {
      for (long s = 0; s < req.m; ++s) {
        F next = p.R * b + half * a;
        a = std::move(b);
        b = std::move(next);
      }
    }
    acc = acc + pow(a, req.ell);
  }
  return acc;
}

// Prefix sums S(0..n_max) by direct accumulation.
template <Field F>
std::vector<F> power_sum_brute_prefix(const PellParams<F>& p, long m, long ell, long n_max) {
  auto P = pell_range(p, 0, m * n_max);
  std::vector<F> out;
  F acc(0);
  for (long k = 0; k <= n_max; ++k) {
    acc = acc + pow(P[static_cast<std::size_t>(m * k)], ell);
    out.push_back(acc);
  }
  return out;
}

// One fraction num(z)/den(z) with coefficients in Q(R).
struct SumFraction {
  Poly<Sym> num;
  Poly<Sym> den;
};

// Generating function sum_n S(n) z^n as a sum of fractions: one over (1 - z),
// one per distinct b + c sigma z + d sigma^2 z^2, one per geometric 1 - sigma z.
struct SymbolicSumGF {
  long m = 1;
  long ell = 1;
  std::vector<SumFraction> fractions;
};

constexpr long kDefaultSymbolicBound = 4;

SymbolicSumGF power_sum_gf(long m, long ell, long bound = kDefaultSymbolicBound);

// All fractions over their product denominator (no reduction in z).
SumFraction combine(const SymbolicSumGF& gf);

// First N+1 series coefficients of num/den at a numeric R.
std::vector<Rational> series_at(const SumFraction& f, const Rational& R, long N);
std::vector<Rational> series_at(const SymbolicSumGF& gf, const Rational& R, long N);

// Q(R)(z): fractions compared as reduced rational functions in z.
using ZFunc = RatFunc<Sym>;

ZFunc to_zfunc(const SumFraction& f);
// Reads an expression in R and z, e.g. "16*(R-2)/((1-z)*R^2)".
ZFunc parse_zfunc(std::string_view text);

struct PrintedExample {
  std::string id;
  long m;
  long ell;
  std::vector<std::string> fractions;
};

// The two worked generating functions, as printed (Sum P(k)^2 and Sum P(2k)^3).
const std::vector<PrintedExample>& printed_examples();

// Compares every printed fraction with the derived one sharing its
// denominator, the printed and derived totals, and both series against brute
// force at R in {2, 4, 3/2} (20 terms).
std::vector<CheckRecord> verify_paper_examples();

}  // namespace pellsum
