#pragma once

#include <functional>
#include <vector>

#include "dhermite/poly.hpp"

namespace dhermite {

// Moment functional: index nu -> exact polynomial value of the nu-th moment.
using MomentSequence = std::function<ExactPoly(int)>;

// Vacuum moments of the bivariate family: for nu = 2s the value is
// y^s L^s (2s)!/s!, for odd nu it vanishes.
ExactPoly vacuum_moment(int nu);

// y = -1 specialization used by the univariate family: (-1)^s (2s)!/s! L^s.
ExactPoly dhp_moment(int nu);

// Finite linear combination of powers of the umbral symbol; coeffs[k]
// multiplies the k-th power.  Evaluation replaces the k-th power by the
// k-th moment, so evaluation is linear by construction.
struct UmbralExpr {
  std::vector<ExactPoly> coeffs;

  UmbralExpr() : coeffs(1) {}
  explicit UmbralExpr(std::vector<ExactPoly> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.resize(1);
  }

  // Multiplies by (symbol + linear): shifts coefficients up one power and
  // adds the polynomial product in place.
  UmbralExpr times_symbol_plus(const ExactPoly& linear) const;
};

// sum_k coeffs[k] * moments(k).
ExactPoly umbral_eval(const UmbralExpr& u, const MomentSequence& moments);

// Binomial expansion of (symbol + linear)^n evaluated against the given
// moment sequence.
ExactPoly umbral_expand_with(int n, const MomentSequence& moments, const ExactPoly& linear);

// (symbol + Lx)^n against the vacuum moments; equals bvdhp(n).
ExactPoly umbral_expand(int n);

// n-th derivative at t = 0 of exp((symbol + Lx) t), taken by building the
// power (symbol + linear)^n through repeated symbol multiplication rather
// than the binomial theorem; equals umbral_expand(n).
ExactPoly umbral_gf_coefficient(int n);

}  // namespace dhermite
