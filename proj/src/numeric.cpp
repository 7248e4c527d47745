#include "dhermite/numeric.hpp"

#include <cmath>
#include <limits>

namespace dhermite {

namespace {

double relative_gap(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

// Radius where exp(-lin*z - quad*z^2) (lin, quad >= 0, not both 0) times a
// modest polynomial factor falls below 1e-20.
double decay_radius(double lin, double quad, int degree) {
  double target = 46.0;
  double r;
  if (quad > 0) {
    r = std::sqrt(target / quad);
  } else {
    r = target / lin;
  }
  for (int i = 0; i < 8; ++i) {
    double rhs = target + degree * std::log1p(r);
    if (quad > 0) {
      // solve quad*r^2 + lin*r = rhs
      r = (-lin + std::sqrt(lin * lin + 4 * quad * rhs)) / (2 * quad);
    } else {
      r = rhs / lin;
    }
  }
  return 1.1 * r + 0.5;
}

}  // namespace

double eval_bvdhp(int n, double x, double y, const DegenerateParam& p) {
  if (n < 0) throw std::domain_error("eval_bvdhp: negative order");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = p.L * x;
  for (int k = 1; k < n; ++k) {
    double h2 = p.L * x * h1 + 2.0 * k * p.L * y * h0;
    h0 = h1;
    h1 = h2;
  }
  if (!std::isfinite(h1)) throw std::overflow_error("eval_bvdhp: value overflowed");
  return h1;
}

double eval_dhp(int n, double x, const DegenerateParam& p) {
  return eval_bvdhp(n, 2.0 * x, -1.0, p);
}

double gf_closed(const GFPoint& pt) {
  return std::exp(pt.param.L * (pt.x * pt.t + pt.y * pt.t * pt.t));
}

double gf_series(const GFPoint& pt, int N) {
  if (N < 0) throw std::domain_error("gf_series: N must be nonnegative");
  const double L = pt.param.L;
  double h0 = 1.0, h1 = L * pt.x;
  double sum = 1.0;       // n = 0 term
  double tpow = 1.0;      // t^n / n!
  for (int n = 1; n <= N; ++n) {
    double h = (n == 1) ? h1 : 0.0;
    if (n > 1) {
      h = L * pt.x * h1 + 2.0 * (n - 1) * L * pt.y * h0;
      h0 = h1;
      h1 = h;
    }
    tpow *= pt.t / n;
    sum += h * tpow;
  }
  return sum;
}

EvenGF even_gf(const GFPoint& pt, Variant v, int N) {
  if (N < 0 || 2 * N > 64) throw std::domain_error("even_gf: series order out of range");
  const double L = pt.param.L;

  EvenGF out;
  if (v == Variant::corrected) {
    double w = 4.0 * pt.t * pt.y * L;
    if (std::fabs(w) >= 1.0) throw std::domain_error("even_gf: |4tyL| must be < 1");
    out.closed = std::exp(pt.t * L * L * pt.x * pt.x / (1.0 - w)) / std::sqrt(1.0 - w);
  } else {
    double w = std::exp(4.0 * pt.t * pt.y * L);  // (1+lam)^{4ty/lam}
    if (w >= 1.0) throw std::domain_error("even_gf: printed convergence condition violated");
    double xfac = std::exp(2.0 * pt.x * L);  // (1+lam)^{2x/lam}
    out.closed = std::exp(pt.t * xfac / (1.0 - w)) / std::sqrt(1.0 - w);
  }

  double tpow = 1.0, sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) tpow *= pt.t / n;
    sum += eval_bvdhp(2 * n, pt.x, pt.y, pt.param) * tpow;
  }
  out.series = sum;
  return out;
}

std::complex<double> even_gf_paper_closed_complex(const GFPoint& pt) {
  const double L = pt.param.L;
  std::complex<double> one_minus_w = 1.0 - std::exp(4.0 * pt.t * pt.y * L);
  std::complex<double> xfac = std::exp(2.0 * pt.x * L);
  return std::exp(pt.t * xfac / one_minus_w) / std::sqrt(one_minus_w);
}

MellinGauss mellin_gauss(double mu, double y, const DegenerateParam& p, Variant v,
                         const QuadratureConfig& cfg) {
  if (!(mu > 0.0)) throw std::domain_error("mellin_gauss: integral diverges for mu <= 0");
  if (!(y > 0.0)) throw std::domain_error("mellin_gauss: y must be positive");
  const double c = y * p.L;

  MellinGauss out;
  // substitute x = v^2: 2 int_0^inf v^(2mu-1) exp(-c v^4) dv, smooth for mu >= 1/2
  double rv = std::pow((46.0 + std::fabs(2.0 * mu - 1.0) * 4.0) / c, 0.25);
  auto f = [&](double vv) { return 2.0 * std::pow(vv, 2.0 * mu - 1.0) * std::exp(-c * vv * vv * vv * vv); };
  out.quad = integrate_adaptive(f, 0.0, rv, cfg).value;

  if (v == Variant::corrected) {
    out.rhs = 0.5 * std::pow(c, -mu / 2.0) * std::tgamma(mu / 2.0);
  } else {
    double fl = std::floor(mu / 2.0);
    out.rhs = 0.5 * std::pow(y, -fl) * std::pow(1.0 / p.L, fl) * std::tgamma(mu / 2.0);
  }
  return out;
}

IntegralEstimate ortho_dhp(int n, int m, const DegenerateParam& p, const QuadratureConfig& cfg) {
  const double c = p.L;
  double r = gaussian_truncation_radius(c, n + m);
  auto f = [&](double x) {
    return std::exp(-c * x * x) * eval_dhp(n, x, p) * eval_dhp(m, x, p);
  };
  QuadResult q = integrate_adaptive(f, -r, r, cfg);
  return {q.value, q.error};
}

double ortho_dhp_norm_closed(int n, const DegenerateParam& p) {
  return std::sqrt(M_PI) * std::pow(2.0, n) * std::tgamma(n + 1.0) * std::pow(p.L, n - 0.5);
}

PartialOrtho partial_ortho(int n, int m, double y, const DegenerateParam& p, Variant v,
                           const QuadratureConfig& cfg) {
  if (!(y < 0.0)) throw std::domain_error("partial_ortho: requires y < 0");
  auto hh = [&](double x) {
    return eval_bvdhp(n, x, y, p) * eval_bvdhp(m, x, y, p);
  };

  PartialOrtho out;
  if (v == Variant::corrected) {
    const double c = p.L / (4.0 * (-y));  // weight exp(Lx^2/(4y)) = exp(-c x^2)
    double r = gaussian_truncation_radius(c, n + m);
    auto f = [&](double x) { return std::exp(-c * x * x) * hh(x); };
    QuadResult q = integrate_adaptive(f, -r, r, cfg);
    out.value = q.value;
    out.error = q.error;
    return out;
  }

  // printed weight exp(-Lx^2/(4y)) grows for y < 0; integrate on expanding
  // intervals until the partial integrals blow past a growth threshold
  const double c = p.L / (4.0 * (-y));
  auto f = [&](double x) { return std::exp(c * x * x) * hh(x); };
  double prev = 0.0;
  for (int k = 1; k <= 6; ++k) {
    double r = std::ldexp(1.0, k);  // 2, 4, ..., 64
    QuadResult q = integrate_adaptive(f, -r, r, cfg);
    if (!std::isfinite(q.value) || std::fabs(q.value) > 1e6 * (1.0 + std::fabs(prev))) {
      out.value = q.value;
      out.divergent = true;
      return out;
    }
    prev = q.value;
    out.value = q.value;
    out.error = q.error;
  }
  return out;
}

double partial_ortho_norm_closed(int n, double y, const DegenerateParam& p) {
  return std::pow(2.0, n + 1) * std::tgamma(n + 1.0) * std::sqrt(M_PI) *
         std::pow(-y, n + 0.5) * std::pow(p.L, n - 0.5);
}

double nodhf(double mu, double x, double y, const DegenerateParam& p, Variant v,
             const QuadratureConfig& cfg) {
  if (!(mu > 0.0)) throw std::domain_error("nodhf: mu must be positive");
  if (y < 0.0 || (y == 0.0 && !(x > 0.0))) {
    throw std::domain_error("nodhf: integral diverges (needs y > 0, or y = 0 with x > 0)");
  }
  const double lin = (v == Variant::corrected) ? x * p.L : x;
  const double quad = y * p.L;
  if (quad == 0.0 && !(lin > 0.0)) {
    throw std::domain_error("nodhf: integral diverges for the requested kernel");
  }

  // substitute z = w^2 (removes the z^(mu-1) endpoint singularity for
  // mu >= 1/2), then map [0,inf) to [0,1) via w = u/(1-u)
  double rw = std::sqrt(decay_radius(std::max(lin, 0.0), quad,
                                     static_cast<int>(std::ceil(std::fabs(mu))) + 2));
  double umax = rw / (1.0 + rw);
  auto f = [&](double u) {
    double om = 1.0 - u;
    double w = u / om;
    double z = w * w;
    return 2.0 * std::pow(w, 2.0 * mu - 1.0) * std::exp(-lin * z - quad * z * z) / (om * om);
  };
  double integral = integrate_adaptive(f, 0.0, umax, cfg).value;
  return integral / std::tgamma(mu);
}

GaussianQuartic gaussian_quartic(double a, double b, const DegenerateParam& p,
                                 const QuadratureConfig& cfg) {
  if (!(b < 0.0)) throw std::domain_error("gaussian_quartic: requires b < 0");
  const double L = p.L;

  // radius where a L r^2 + |b| L r^4 >= 46
  double lo = 0.0, hi = 1.0;
  auto decay = [&](double r) { return a * L * r * r + (-b) * L * r * r * r * r; };
  while (decay(hi) < 46.0) hi *= 2.0;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (decay(mid) < 46.0 ? lo : hi) = mid;
  }
  double r = 1.1 * hi + 0.5;

  auto f = [&](double x) {
    double x2 = x * x;
    return std::exp(-a * L * x2 + b * L * x2 * x2);
  };
  GaussianQuartic out;
  out.quad = integrate_adaptive(f, -r, r, cfg).value;
  out.via_nodhf = std::sqrt(M_PI) * nodhf(0.5, a, -b, p, Variant::corrected, cfg);
  return out;
}

double scaling_checks(int n, double x, double y, const DegenerateParam& p) {
  if (y == 0.0) throw std::domain_error("scaling_checks: y must be nonzero");
  double worst = 0.0;
  double lhs = eval_bvdhp(n, x, y, p);
  if (y > 0.0) {
    double rhs = std::pow(y, 0.5 * n) * eval_bvdhp(n, x / std::sqrt(y), 1.0, p);
    worst = std::max(worst, relative_gap(lhs, rhs));
  } else {
    double rhs = std::pow(-y, 0.5 * n) * eval_dhp(n, x / (2.0 * std::sqrt(-y)), p);
    worst = std::max(worst, relative_gap(lhs, rhs));
  }
  DegenerateParam classical = make_param(0.0);
  double via_classical =
      std::pow(p.L, 0.5 * n) * eval_dhp(n, x * std::sqrt(p.L), classical);
  worst = std::max(worst, relative_gap(via_classical, eval_dhp(n, x, p)));
  return worst;
}

}  // namespace dhermite
