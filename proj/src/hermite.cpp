#include "dhermite/hermite.hpp"

#include <cmath>

namespace dhermite {

namespace {

void check_order(int n) {
  if (n < 0) throw std::domain_error("order must be nonnegative");
  if (n > kMaxOrder) throw std::domain_error("order exceeds the configured maximum (64)");
}

// cos(m pi/2) on the integers: 1, 0, -1, 0, ...
double cos_quarter(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return 1.0;
    case 2: return -1.0;
    default: return 0.0;
  }
}

}  // namespace

ExactPoly bvdhp(int n) {
  check_order(n);
  ExactPoly p;
  for (int k = 0; k <= n / 2; ++k) {
    Rational c = make_rational(factorial(n), factorial(n - 2 * k) * factorial(k));
    p += ExactPoly::term(c, n - 2 * k, k, n - k);
  }
  return p;
}

ExactPoly dhp(int n) {
  check_order(n);
  ExactPoly p;
  for (int k = 0; k <= n / 2; ++k) {
    Rational c = make_rational(factorial(n), factorial(n - 2 * k) * factorial(k));
    if (k % 2) c = -c;
    c *= rational_pow(Rational(2), n - 2 * k);
    p += ExactPoly::term(c, n - 2 * k, 0, n - k);
  }
  return p;
}

ExactPoly diff_x_closed(int n, int r) {
  check_order(n);
  if (r < 0) throw std::domain_error("derivative order must be nonnegative");
  if (r > n) return {};
  Rational c = make_rational(factorial(n), factorial(n - r));
  return bvdhp(n - r).mul_term(c, 0, 0, r);
}

ExactPoly diff_y_closed(int n, int r) {
  check_order(n);
  if (r < 0) throw std::domain_error("derivative order must be nonnegative");
  if (2 * r > n) return {};
  Rational c = make_rational(factorial(n), factorial(n - 2 * r));
  return bvdhp(n - 2 * r).mul_term(c, 0, 0, r);
}

ExactPoly recurrence_next(int n) {
  check_order(n);
  ExactPoly next = bvdhp(n).mul_term(1, 1, 0, 1);  // Lx H_n
  if (n >= 1) {
    next += bvdhp(n - 1).mul_term(Rational(2 * n), 0, 1, 1);  // 2nLy H_{n-1}
  }
  return next;
}

ExactPoly apply_raising(const ExactPoly& p) {
  return p.mul_term(1, 1, 0, 1) + p.diff_x().mul_term(2, 0, 1, 0);
}

ExactPoly apply_lowering(const ExactPoly& p) { return p.diff_x().div_l(1); }

ExactPoly monomial_construct(int n) {
  check_order(n);
  ExactPoly p = ExactPoly::constant(1);
  for (int i = 0; i < n; ++i) p = apply_raising(p);
  return p;
}

ExactPoly ode_residual(int n) {
  check_order(n);
  ExactPoly h = bvdhp(n);
  ExactPoly r = h.diff_x().mul_term(1, 1, 0, 0);
  r += h.diff_x().diff_x().div_l(1).mul_term(2, 0, 1, 0);
  r -= Rational(n) * h;
  return r;
}

ExactPoly operational_construct(int n) {
  check_order(n);
  ExactPoly xn = ExactPoly::term(1, n, 0, n);  // (Lx)^n
  ExactPoly acc;
  Rational inv_fact(1);
  for (int k = 0; k <= n / 2; ++k) {
    if (k > 0) inv_fact /= Rational(k);
    acc += xn.div_l(k).mul_term(inv_fact, 0, k, 0);
    xn = xn.diff_x().diff_x();
  }
  return acc;
}

ExactPoly inverse_expansion(int n) {
  check_order(n);
  // sum with an extra L^n so every intermediate exponent stays nonnegative;
  // the total equals (Lx)^n, so the final division is exact.
  ExactPoly acc;
  for (int r = 0; r <= n / 2; ++r) {
    Rational c = make_rational(factorial(n), factorial(r) * factorial(n - 2 * r));
    if (r % 2) c = -c;
    acc += bvdhp(n - 2 * r).mul_term(c, 0, r, r);
  }
  return acc.div_l(n);
}

std::optional<ExactPoly> rodrigues(int n, Variant v) {
  check_order(n);
  ExactPoly q = ExactPoly::constant(1);
  for (int k = 0; k < n; ++k) {
    q = q.diff_x() + q.mul_term(make_rational(1, 2), 1, -1, 1);  // + (Lx/2y) q
  }
  if (v == Variant::corrected) {
    return q.mul_term(rational_pow(Rational(2), n), 0, n, 0);  // (2y)^n q_n
  }
  if (n % 2 != 0) return std::nullopt;  // (-1)^(n/2) is not real for odd n
  Rational pref = rational_pow(make_rational(1, 2), n);
  if ((n / 2) % 2) pref = -pref;
  return pref * q;
}

std::pair<ExactPoly, ExactPoly> integral_x_identity(int n) {
  check_order(n);
  ExactPoly lhs = bvdhp(n).integrate_x();
  ExactPoly rhs;
  for (int r = 0; r <= n; ++r) {
    Rational c = make_rational(binomial(n, r), BigInt(r + 1));
    if (r % 2) c = -c;
    rhs += bvdhp(n - r).mul_term(c, r + 1, 0, r);
  }
  return {lhs, rhs};
}

std::pair<ExactPoly, ExactPoly> integral_y_identity(int n) {
  check_order(n);
  ExactPoly lhs = bvdhp(n).integrate_y();
  ExactPoly rhs;
  for (int r = 0; r <= n / 2; ++r) {
    Rational c = make_rational(factorial(n), factorial(r + 1) * factorial(n - 2 * r));
    if (r % 2) c = -c;
    rhs += bvdhp(n - 2 * r).mul_term(c, 0, r + 1, r);
  }
  return {lhs, rhs};
}

double repeated_cos_integral(int k, double x) {
  if (k < 0) throw std::domain_error("repeated_cos_integral: negative depth");
  double trig;
  switch (((k % 4) + 4) % 4) {
    case 0: trig = std::cos(x); break;
    case 1: trig = std::sin(x); break;
    case 2: trig = -std::cos(x); break;
    default: trig = -std::sin(x); break;
  }
  double poly = 0.0, xj = 1.0;  // xj = x^j / j!
  for (int j = 0; j < k; ++j) {
    poly += cos_quarter(k - j) * xj;
    xj *= x / (j + 1);
  }
  return trig - poly;
}

double cosine_integral_x(int n, double x0, double y, const DegenerateParam& p, Variant v) {
  check_order(n);
  double sum = 0.0;
  for (int r = 0; r <= n; ++r) {
    double hval = bvdhp(n - r).eval(p, x0, y);
    double lr = std::pow(p.L, r);
    double term;
    if (v == Variant::corrected) {
      double dcoef = factorial(n).get_d() / factorial(n - r).get_d();
      term = dcoef * lr * hval * repeated_cos_integral(r + 1, x0);
    } else {
      double bin = binomial(n, r).get_d();
      term = std::cos(x0 + r * M_PI / 2) / (r + 1) * bin * lr * hval;
    }
    sum += (r % 2 ? -term : term);
  }
  return sum;
}

double cosine_integral_y(int n, double x, double y0, const DegenerateParam& p, Variant v) {
  check_order(n);
  double sum = 0.0;
  for (int r = 0; r <= n / 2; ++r) {
    double hval = bvdhp(n - 2 * r).eval(p, x, y0);
    double lr = std::pow(p.L, r);
    double dcoef = factorial(n).get_d() / factorial(n - 2 * r).get_d();
    double term;
    if (v == Variant::corrected) {
      term = dcoef * lr * hval * repeated_cos_integral(r + 1, y0);
    } else {
      double fact = factorial(r + 1).get_d();
      term = std::cos(x + r * M_PI / 2) / fact * dcoef * lr * hval;
    }
    sum += (r % 2 ? -term : term);
  }
  return sum;
}

}  // namespace dhermite
