#pragma once

#include <string>

#include "pellsum/ratfunc.hpp"

namespace pellsum {

// Human-readable forms, e.g. "2*R^2 + R - 3" and "(R + 1)/(R^2)". The
// canonical machine format stays the coefficient-list str().
std::string to_expr(const Poly<Rational>& p, const std::string& var = "R");
std::string to_expr(const Sym& f, const std::string& var = "R");
// Polynomial in z with Q(R) coefficients.
std::string to_expr(const Poly<Sym>& p, const std::string& var = "z");

}  // namespace pellsum
