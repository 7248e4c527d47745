#pragma once

#include <functional>

namespace dhermite {

// Integration scheme parameters.  The truncation policy for infinite
// intervals picks the radius where the integrand weight drops below 1e-18.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated local estimates
  bool converged = true;
};

// Adaptive bisection with an embedded Gauss 7 / Kronrod 15 pair.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadratureConfig& cfg);

// Smallest radius R with c*R^2 - degree*log(1+R) >= 46, i.e. the point where
// a Gaussian weight exp(-c x^2) times a degree-bounded polynomial factor
// falls below ~1e-20.
double gaussian_truncation_radius(double c, int degree);

}  // namespace dhermite
