#include "pellsum/pell.hpp"

namespace pellsum {

namespace {

Rational brod_r(const BrodForm& form) {
  if (form.r < 1) throw InvalidInput("Brod form needs r >= 1");
  if (form.r > 62) throw InvalidInput("Brod form r too large");
  return Rational(1L << form.r);
}

}  // namespace

Rational brod_convert(const BrodForm& form, long n) {
  if (n < 0) throw InvalidInput("brod_convert needs n >= 0");
  return pell_iter(PellParams<Rational>(brod_r(form)), n + 2);
}

Rational brod_direct(const BrodForm& form, long n) {
  if (n < 0) throw InvalidInput("brod_direct needs n >= 0");
  const Rational R = brod_r(form);
  const Rational d = R * R + Rational(2) * R;
  const Rational half(1, 2);
  // (R+1)/W = (R+1) W / D
  const Rational k = (R + Rational(1)) / d;
  QuadExt<Rational> c1(Rational(1), k, d);
  QuadExt<Rational> c2(Rational(1), -k, d);
  QuadExt<Rational> r1(R * half, half, d);
  QuadExt<Rational> r2(R * half, -half, d);
  QuadExt<Rational> v = c1 * pow(r1, n) + c2 * pow(r2, n);
  if (!v.w_part().is_zero()) throw BinetInconsistency("Brod form has nonzero W part " + v.w_part().str());
  return v.rational_part();
}

}  // namespace pellsum
