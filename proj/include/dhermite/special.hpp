#pragma once

namespace dhermite {

// Complementary error function to ~1e-14 relative accuracy, used by the
// closed-form cross-checks of the negative-order functions.
//
// For |x| < 2 it uses the positive-term confluent series
//   erf(x) = (2/sqrt(pi)) x e^{-x^2} sum_n (2x^2)^n / (1*3*...*(2n+1)),
// and for x >= 2 the Laplace continued fraction
//   erfc(x) = (e^{-x^2}/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated by the modified Lentz algorithm.  Negative arguments use the
// reflection erfc(-x) = 2 - erfc(x).
double erfc_accurate(double x);

}  // namespace dhermite
