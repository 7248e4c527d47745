#include "dhermite/special.hpp"

#include <cmath>

namespace dhermite {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215;
constexpr double kOneOverSqrtPi = 0.5641895835477562869480794515608;

double erf_series(double x) {
  // (2/sqrt(pi)) x e^{-x^2} sum_n (2x^2)^n / (2n+1)!!  -- all terms positive
  double t = 1.0, sum = 1.0;
  double z = 2.0 * x * x;
  for (int n = 1; n < 200; ++n) {
    t *= z / (2 * n + 1);
    sum += t;
    if (t < 1e-17 * sum) break;
  }
  return kTwoOverSqrtPi * x * std::exp(-x * x) * sum;
}

double erfc_cf(double x) {
  // modified Lentz on x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))
  const double tiny = 1e-300;
  double f = x, c = x, d = 0.0;
  for (int k = 1; k < 300; ++k) {
    double ak = 0.5 * k;
    double bk = x;
    d = bk + ak * d;
    if (d == 0.0) d = tiny;
    c = bk + ak / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return kOneOverSqrtPi * std::exp(-x * x) / f;
}

}  // namespace

double erfc_accurate(double x) {
  if (x < 0.0) return 2.0 - erfc_accurate(-x);
  if (x < 2.0) return 1.0 - erf_series(x);
  return erfc_cf(x);
}

}  // namespace dhermite
