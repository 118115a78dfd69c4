#include "pellsum/render.hpp"

#include "pellsum/report.hpp"

namespace pellsum {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::paper_discrepancy_confirmed:
      return "paper-discrepancy-confirmed";
  }
  return "?";
}

namespace {

std::string power_of(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

std::string to_expr(const Poly<Rational>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool neg = c[k].sign() < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const Rational mag = neg ? -c[k] : c[k];
    if (k == 0) {
      s += mag.str();
    } else if (mag.is_one()) {
      s += power_of(var, k);
    } else {
      s += mag.str() + "*" + power_of(var, k);
    }
  }
  return s;
}

std::string to_expr(const Sym& f, const std::string& var) {
  if (f.den().is_one()) return to_expr(f.num(), var);
  return "(" + to_expr(f.num(), var) + ")/(" + to_expr(f.den(), var) + ")";
}

std::string to_expr(const Poly<Sym>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (k > 0 && c[k] == Sym(1)) {
      s += power_of(var, k);
      continue;
    }
    // to_expr already brackets a proper fraction
    std::string coeff = c[k].den().is_one() ? "(" + to_expr(c[k]) + ")" : to_expr(c[k]);
    s += k == 0 ? coeff : coeff + "*" + power_of(var, k);
  }
  return s;
}

}  // namespace pellsum
