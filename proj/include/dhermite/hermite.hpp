#pragma once

#include <optional>
#include <utility>

#include "dhermite/poly.hpp"
#include "dhermite/variant.hpp"

namespace dhermite {

// Order cap for exact constructions; coefficients grow like n! 2^n.
inline constexpr int kMaxOrder = 64;

// H_n(x,y|L) in the series form
//   sum_{k=0}^{floor(n/2)} n!/((n-2k)! k!) L^(n-k) x^(n-2k) y^k.
ExactPoly bvdhp(int n);

// Univariate family H_n(x|L) = bvdhp(n) with x -> 2x, y -> -1:
//   sum_{k=0}^{floor(n/2)} (-1)^k n!/(k!(n-2k)!) L^(n-k) (2x)^(n-2k).
ExactPoly dhp(int n);

// Closed form of the r-th x-derivative: n!/(n-r)! L^r H_{n-r}.
// Over-differentiation (r > n) yields the zero polynomial.
ExactPoly diff_x_closed(int n, int r);

// Closed form of the r-th y-derivative: n!/(n-2r)! L^r H_{n-2r};
// zero when 2r > n.
ExactPoly diff_y_closed(int n, int r);

// Three-term step Lx H_n + 2nLy H_{n-1}; equals bvdhp(n+1).
ExactPoly recurrence_next(int n);

// Raising operator Lx + 2y d/dx: maps H_n to H_{n+1}.
ExactPoly apply_raising(const ExactPoly& p);

// Lowering operator (1/L) d/dx, realized as an exact L-exponent decrement;
// maps H_n to n H_{n-1}.  Throws representation_error when a term of the
// derivative carries no L factor.
ExactPoly apply_lowering(const ExactPoly& p);

// n-fold raising applied to 1.
ExactPoly monomial_construct(int n);

// x dH/dx + (2y/L) d2H/dx2 - n H, computed exactly; the zero polynomial.
ExactPoly ode_residual(int n);

// Finite expansion of exp((y/L) d2/dx2) applied to (Lx)^n.
ExactPoly operational_construct(int n);

// Expansion of x^n in the Hermite family; the inner sum is accumulated with
// an L^n overall factor and divided out exactly at the end.
ExactPoly inverse_expansion(int n);

// Weighted n-th derivative construction.  With q_0 = 1 and
// q_{k+1} = dq_k/dx + (Lx/2y) q_k, the corrected variant returns (2y)^n q_n
// (equal to bvdhp(n)); the paper variant returns (-1)^(n/2)/2^n q_n for even
// n and nullopt (ill-defined prefactor) for odd n.
std::optional<ExactPoly> rodrigues(int n, Variant v);

// Finite integral of H_n(z,y) dz from 0 to x: exact antiderivative on the
// left, the derivative-ladder expansion on the right.  Equal for all n.
std::pair<ExactPoly, ExactPoly> integral_x_identity(int n);

// Finite integral of H_n(x,e) de from 0 to y, same structure.
std::pair<ExactPoly, ExactPoly> integral_y_identity(int n);

// k-fold repeated integral of cos from 0:
//   I_1 = sin x,  I_{k+1}(x) = int_0^x I_k.
// Evaluated as cos(x - k pi/2) minus its degree-(k-1) Taylor polynomial.
double repeated_cos_integral(int k, double x);

// int_0^x0 H_n(z,y) cos z dz.  The corrected variant expands through the
// repeated integrals I_k and matches quadrature; the paper variant evaluates
// the printed cos(x0 + r pi/2)/(r+1) form.
double cosine_integral_x(int n, double x0, double y, const DegenerateParam& p, Variant v);

// int_0^y0 H_n(x,e) cos e de.  The printed form keeps cos(x + r pi/2) with
// the x variable; the corrected variant applies the repeated-integral
// expansion in y.
double cosine_integral_y(int n, double x, double y0, const DegenerateParam& p, Variant v);

}  // namespace dhermite
