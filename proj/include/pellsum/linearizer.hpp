#pragma once

#include <string>
#include <vector>

#include "pellsum/pell.hpp"

namespace pellsum {

enum class TermKind { p_term, p_shifted_term, constant_term };

const char* to_string(TermKind kind);

// coeff * P(stride*n + shift) * (-R/2)^(geo_j*n), or coeff * (-R/2)^(geo_j*n)
// for a constant_term (stride = shift = 0).
struct LinTerm {
  Sym coeff;
  long stride = 0;
  long shift = 0;
  long geo_j = 0;
  TermKind kind = TermKind::p_term;
};

// P(n)^ell as a linear combination of LinTerms, valid for every n >= 0.
struct LinearizedForm {
  long ell = 1;
  std::vector<LinTerm> terms;
  // Indices t whose P(t) divides some coefficient; the form is unusable at a
  // numeric R where one of them vanishes.
  std::vector<long> pell_denominators;
};

// ell = 2m+1:
//   P(n)^(2m+1) = 2^(2m) / (R^(3m) (R+2)^m)
//                 * sum_{j=0}^{m} (-1)^j C(2m+1, j) P((2m+1-2j) n) (-R/2)^(jn)
LinearizedForm linearize_odd(long m);

// ell = 2m, m >= 1: with t = 2(m-j),
//   P(n)^(2m) = sum_{j<m} (-1)^j C(2m,j) (-R/2)^(jn) [ 2^(2m+1)/(R^(3m)(R+2)^m) P(t(n+1))/P(t)
//                                     - 2^(2m-1)/(R^(3m-1)(R+2)^m) P(tn) Q(t)/P(t) ]
//               + (-1)^m C(2m,m) 2^(2m)/(R^(3m)(R+2)^m) (-R/2)^(mn)
LinearizedForm linearize_even(long m);

LinearizedForm linearize(long ell);

// Coefficient c(R) at the given parameter.
inline Rational coeff_at(const Sym& c, const PellParams<Rational>& p) { return c.eval(p.R); }
Sym coeff_at(const Sym& c, const PellParams<Sym>& p);

template <Field F>
void check_nondegenerate(const LinearizedForm& form, const PellParams<F>& p) {
  for (long t : form.pell_denominators) {
    if (pell_iter(p, t).is_zero()) {
      throw DegenerateDenominator("P(" + std::to_string(t) + ") vanishes at R = " + p.R.str());
    }
  }
}

template <Field F>
F eval_linearized(const LinearizedForm& form, const PellParams<F>& p, long n) {
  if (n < 0) throw InvalidInput("eval_linearized needs n >= 0");
  check_nondegenerate(form, p);
  const F ratio = p.root_product();
  F acc(0);
  for (const auto& t : form.terms) {
    F v = coeff_at(t.coeff, p) * pow(ratio, t.geo_j * n);
    if (t.kind != TermKind::constant_term) v = v * pell_iter(p, t.stride * n + t.shift);
    acc = acc + v;
  }
  return acc;
}

// The odd-power sum with C(m, j) and P((m-2j) n) in place of C(2m+1, j) and
// P((2m+1-2j) n). Not an identity; evaluated to show where it breaks.
template <Field F>
F odd_power_reduced_binomial_variant(const PellParams<F>& p, long m, long n) {
  const F& R = p.R;
  const F pre = pow(F(2), 2 * m) / (pow(R, 3 * m) * pow(R + F(2), m));
  const F ratio = p.root_product();
  F acc(0);
  for (long j = 0; j <= m; ++j) {
    F term = F(binomial(m, j).num().get_si()) * pell_iter(p, (m - 2 * j) * n) * pow(ratio, j * n);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return pre * acc;
}

// x^(2N) - x^(-2N) == (x + 1/x) sum_{l=0}^{N-1} C(N+l, N-l-1) (x - 1/x)^(2l+1)
// as Laurent polynomials.
bool laurent_identity_check(long N);

}  // namespace pellsum
