#pragma once

#include <complex>

#include "dhermite/param.hpp"
#include "dhermite/quadrature.hpp"
#include "dhermite/variant.hpp"

namespace dhermite {

// Value of H_n(x,y|L) by the three-term recurrence
//   H_{k+1} = Lx H_k + 2kLy H_{k-1},   H_0 = 1, H_1 = Lx.
// Throws std::overflow_error when the recurrence leaves the double range.
double eval_bvdhp(int n, double x, double y, const DegenerateParam& p);

// Value of the univariate H_n(x|L) via the same recurrence at (2x, -1).
double eval_dhp(int n, double x, const DegenerateParam& p);

// Argument bundle of the generating-function operations.
struct GFPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  DegenerateParam param;
};

// exp(L(xt + yt^2)).
double gf_closed(const GFPoint& pt);

// sum_{n<=N} eval_bvdhp(n) t^n / n!.
double gf_series(const GFPoint& pt, int N);

struct EvenGF {
  double closed = 0.0;
  double series = 0.0;
};

// Even-index generating function sum_n H_{2n} t^n/n!.  The corrected closed
// form is (1-4tyL)^{-1/2} exp(t L^2 x^2/(1-4tyL)); the paper variant keeps
// the printed (1-(1+lam)^{4ty/lam})^{-1/2} exp(t (1+lam)^{2x/lam}/(1-...)).
// Throws std::domain_error outside the respective convergence condition.
EvenGF even_gf(const GFPoint& pt, Variant v, int N);

// The printed closed form continued to complex values, for reporting the
// residual at points where 1-(1+lam)^{4ty/lam} is negative and the real
// formula is undefined.
std::complex<double> even_gf_paper_closed_complex(const GFPoint& pt);

struct MellinGauss {
  double quad = 0.0;
  double rhs = 0.0;
};

// int_0^inf x^(mu-1) exp(-yL x^2) dx against the closed form.  Corrected rhs
// is (1/2)(yL)^(-mu/2) Gamma(mu/2); the paper rhs floors the exponents:
// (1/2) y^(-floor(mu/2)) L^(-floor(mu/2)) Gamma(mu/2).
MellinGauss mellin_gauss(double mu, double y, const DegenerateParam& p, Variant v,
                         const QuadratureConfig& cfg);

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;
};

// int exp(-L x^2) H_n(x|L) H_m(x|L) dx over the real line.
IntegralEstimate ortho_dhp(int n, int m, const DegenerateParam& p, const QuadratureConfig& cfg);

// Diagonal closed form sqrt(pi) 2^n n! L^(n-1/2).
double ortho_dhp_norm_closed(int n, const DegenerateParam& p);

struct PartialOrtho {
  double value = 0.0;
  double error = 0.0;
  bool divergent = false;
};

// int w(x) H_n(x,y|L) H_m(x,y|L) dx at fixed y < 0.  The corrected weight is
// exp(Lx^2/(4y)) (decaying); the paper weight exp(-Lx^2/(4y)) grows for
// y < 0 and the result is flagged divergent once the expanding partial
// integrals blow up.  Throws std::domain_error for y >= 0.
PartialOrtho partial_ortho(int n, int m, double y, const DegenerateParam& p, Variant v,
                           const QuadratureConfig& cfg);

// Diagonal closed form 2^(n+1) n! sqrt(pi) (-y)^(n+1/2) L^(n-1/2).
double partial_ortho_norm_closed(int n, double y, const DegenerateParam& p);

// Negative-order function (1/Gamma(mu)) int_0^inf z^(mu-1) K(z) dz with
// kernel K = exp(-xLz - yLz^2) (corrected, L-consistent) or the printed
// K = exp(-xz - yLz^2) (paper).  Requires mu > 0 and y > 0, or y = 0 with
// x > 0.
double nodhf(double mu, double x, double y, const DegenerateParam& p, Variant v,
             const QuadratureConfig& cfg);

struct GaussianQuartic {
  double quad = 0.0;
  double via_nodhf = 0.0;
};

// int exp(-aLx^2 + bLx^4) dx (b < 0) against sqrt(pi) * nodhf(1/2, a, -b).
GaussianQuartic gaussian_quartic(double a, double b, const DegenerateParam& p,
                                 const QuadratureConfig& cfg);

// Maximum scaled residual of the argument-scaling identities linking the
// bivariate and univariate families (and the classical family at lambda=0):
//   H_n(x,y|L) = y^(n/2)   H_n(x/sqrt(y), 1|L)      for y > 0,
//   H_n(x,y|L) = (-y)^(n/2) H_n(x/(2 sqrt(-y))|L)   for y < 0,
//   L^(n/2) H_n^classical(x sqrt(L)) = H_n(x|L).
// Throws std::domain_error at y = 0.
double scaling_checks(int n, double x, double y, const DegenerateParam& p);

}  // namespace dhermite
