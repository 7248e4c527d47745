#include "dhermite/umbral.hpp"

#include "dhermite/hermite.hpp"

namespace dhermite {

ExactPoly vacuum_moment(int nu) {
  if (nu < 0) throw std::domain_error("vacuum_moment: negative index");
  if (nu % 2) return {};
  int s = nu / 2;
  Rational c = make_rational(factorial(2 * s), factorial(s));
  return ExactPoly::term(c, 0, s, s);
}

ExactPoly dhp_moment(int nu) {
  if (nu < 0) throw std::domain_error("dhp_moment: negative index");
  if (nu % 2) return {};
  int s = nu / 2;
  Rational c = make_rational(factorial(2 * s), factorial(s));
  if (s % 2) c = -c;
  return ExactPoly::term(c, 0, 0, s);
}

UmbralExpr UmbralExpr::times_symbol_plus(const ExactPoly& linear) const {
  UmbralExpr r;
  r.coeffs.assign(coeffs.size() + 1, ExactPoly());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    r.coeffs[k + 1] += coeffs[k];
    r.coeffs[k] += coeffs[k] * linear;
  }
  return r;
}

ExactPoly umbral_eval(const UmbralExpr& u, const MomentSequence& moments) {
  ExactPoly acc;
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    if (u.coeffs[k].is_zero()) continue;
    acc += u.coeffs[k] * moments(static_cast<int>(k));
  }
  return acc;
}

ExactPoly umbral_expand_with(int n, const MomentSequence& moments, const ExactPoly& linear) {
  if (n < 0 || n > kMaxOrder) throw std::domain_error("umbral_expand: order out of range");
  ExactPoly acc;
  ExactPoly lin_pow = ExactPoly::constant(1);  // linear^(n-k), built downward
  std::vector<ExactPoly> powers(n + 1);
  powers[0] = lin_pow;
  for (int i = 1; i <= n; ++i) powers[i] = powers[i - 1] * linear;
  for (int k = 0; k <= n; ++k) {
    ExactPoly m = moments(k);
    if (m.is_zero()) continue;
    acc += make_rational(binomial(n, k), BigInt(1)) * (powers[n - k] * m);
  }
  return acc;
}

ExactPoly umbral_expand(int n) {
  return umbral_expand_with(n, vacuum_moment, ExactPoly::term(1, 1, 0, 1));
}

ExactPoly umbral_gf_coefficient(int n) {
  if (n < 0 || n > kMaxOrder) throw std::domain_error("umbral_gf_coefficient: order out of range");
  ExactPoly lx = ExactPoly::term(1, 1, 0, 1);
  UmbralExpr u;
  u.coeffs[0] = ExactPoly::constant(1);
  for (int i = 0; i < n; ++i) u = u.times_symbol_plus(lx);
  return umbral_eval(u, vacuum_moment);
}

}  // namespace dhermite
