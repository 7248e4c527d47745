#include "dhermite/param.hpp"

#include <cmath>

namespace dhermite {

DegenerateParam make_param(double lambda) {
  if (!(lambda > -1.0)) {
    throw std::domain_error("make_param: lambda must be > -1");
  }
  DegenerateParam p;
  p.lambda = lambda;
  if (std::fabs(lambda) < 1e-4) {
    p.L = 1.0 + lambda * (-1.0 / 2 + lambda * (1.0 / 3 + lambda * (-1.0 / 4 + lambda / 5)));
  } else {
    p.L = std::log1p(lambda) / lambda;
  }
  return p;
}

}  // namespace dhermite
