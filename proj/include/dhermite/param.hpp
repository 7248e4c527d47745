#pragma once

#include <stdexcept>

namespace dhermite {

// Deformation parameter lambda together with the constant L = log(1+lambda)/lambda
// through which lambda enters every polynomial coefficient.  lambda = 0 is the
// classical limit, where L = 1 (removable singularity).  L > 0 for all lambda > -1.
struct DegenerateParam {
  double lambda = 0.0;
  double L = 1.0;
};

// Builds the parameter, evaluating L stably.  Below |lambda| = 1e-4 the direct
// quotient log1p(lambda)/lambda cancels; a truncated alternating series
// 1 - lambda/2 + lambda^2/3 - lambda^3/4 + lambda^4/5 is used instead.
// Throws std::domain_error for lambda <= -1.
DegenerateParam make_param(double lambda);

}  // namespace dhermite
