#include "pellsum/linearizer.hpp"

#include "pellsum/laurent.hpp"

namespace pellsum {

const char* to_string(TermKind kind) {
  switch (kind) {
    case TermKind::p_term:
      return "P_term";
    case TermKind::p_shifted_term:
      return "P_shifted_term";
    case TermKind::constant_term:
      return "constant_term";
  }
  return "?";
}

namespace {

Sym sym(const Rational& v) { return Sym(v); }

// 2^e / (R^a (R+2)^b)
Sym prefactor(long e, long a, long b) {
  const Sym R = Sym::variable();
  return pow(Sym(2), e) / (pow(R, a) * pow(R + Sym(2), b));
}

}  // namespace

LinearizedForm linearize_odd(long m) {
  if (m < 0) throw InvalidInput("linearize_odd needs m >= 0");
  LinearizedForm form;
  form.ell = 2 * m + 1;
  const Sym pre = prefactor(2 * m, 3 * m, m);
  for (long j = 0; j <= m; ++j) {
    Sym c = pre * sym(binomial(2 * m + 1, j));
    if (j % 2) c = -c;
    form.terms.push_back({c, 2 * m + 1 - 2 * j, 0, j, TermKind::p_term});
  }
  return form;
}

LinearizedForm linearize_even(long m) {
  if (m < 1) throw InvalidInput("linearize_even needs m >= 1");
  const auto sp = symbolic_params();
  LinearizedForm form;
  form.ell = 2 * m;
  const Sym shifted_pre = prefactor(2 * m + 1, 3 * m, m);
  const Sym plain_pre = prefactor(2 * m - 1, 3 * m - 1, m);
  std::vector<LinTerm> shifted;
  std::vector<LinTerm> plain;
  for (long j = 0; j < m; ++j) {
    const long t = 2 * (m - j);
    const Sym pt = pell_iter(sp, t);
    Sym sign_binom = sym(binomial(2 * m, j));
    if (j % 2) sign_binom = -sign_binom;
    shifted.push_back({sign_binom * shifted_pre / pt, t, t, j, TermKind::p_shifted_term});
    plain.push_back({-(sign_binom * plain_pre * q_pell(sp, t) / pt), t, 0, j, TermKind::p_term});
    form.pell_denominators.push_back(t);
  }
  form.terms = std::move(shifted);
  form.terms.insert(form.terms.end(), plain.begin(), plain.end());
  Sym middle = sym(binomial(2 * m, m)) * prefactor(2 * m, 3 * m, m);
  if (m % 2) middle = -middle;
  form.terms.push_back({middle, 0, 0, m, TermKind::constant_term});
  return form;
}

LinearizedForm linearize(long ell) {
  if (ell < 1) throw InvalidInput("linearize needs ell >= 1");
  return ell % 2 ? linearize_odd((ell - 1) / 2) : linearize_even(ell / 2);
}

Sym coeff_at(const Sym& c, const PellParams<Sym>& p) {
  if (p.R == Sym::variable()) return c;
  auto lift = [](const Rational& v) { return Sym(v); };
  return c.num().map(lift).eval(p.R) / c.den().map(lift).eval(p.R);
}

bool laurent_identity_check(long N) {
  if (N < 1) throw InvalidInput("laurent_identity_check needs N >= 1");
  const LaurentPoly x = LaurentPoly::x();
  const LaurentPoly xi = LaurentPoly::monomial(Rational(1), -1);
  const LaurentPoly lhs = pow(x, 2 * N) - pow(xi, 2 * N);
  const LaurentPoly diff = x - xi;
  const LaurentPoly diff_sq = diff * diff;
  LaurentPoly sum;
  LaurentPoly odd_power = diff;  // (x - 1/x)^(2l+1)
  for (long l = 0; l < N; ++l) {
    sum = sum + LaurentPoly::monomial(binomial(N + l, N - l - 1), 0) * odd_power;
    odd_power = odd_power * diff_sq;
  }
  return lhs == (x + xi) * sum;
}

}  // namespace pellsum
