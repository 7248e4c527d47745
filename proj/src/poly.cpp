#include "dhermite/poly.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace dhermite {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero base with negative exponent");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational acc(1), b = base;
  unsigned k = static_cast<unsigned>(e);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  acc.canonicalize();
  return acc;
}

namespace {

double ipow(double base, int e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  double acc = 1.0, b = base;
  unsigned k = static_cast<unsigned>(e);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace

void ExactPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.x < 0 || m.l < 0) {
    throw representation_error("ExactPoly: negative power of x or L");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactPoly ExactPoly::constant(const Rational& c) {
  ExactPoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

ExactPoly ExactPoly::term(const Rational& c, int ex, int ey, int el) {
  ExactPoly p;
  p.add_term({ex, ey, el}, c);
  return p;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

ExactPoly operator*(const ExactPoly& lhs, const ExactPoly& rhs) {
  ExactPoly r;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      r.add_term({ma.x + mb.x, ma.y + mb.y, ma.l + mb.l}, ca * cb);
    }
  }
  return r;
}

ExactPoly operator*(const Rational& c, const ExactPoly& p) {
  ExactPoly r;
  if (c == 0) return r;
  for (const auto& [m, q] : p.terms_) r.terms_.emplace(m, c * q);
  return r;
}

ExactPoly ExactPoly::diff_x() const {
  ExactPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.x == 0) continue;
    r.add_term({m.x - 1, m.y, m.l}, c * m.x);
  }
  return r;
}

ExactPoly ExactPoly::diff_y() const {
  ExactPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.y == 0) continue;
    r.add_term({m.x, m.y - 1, m.l}, c * m.y);
  }
  return r;
}

ExactPoly ExactPoly::integrate_x() const {
  ExactPoly r;
  for (const auto& [m, c] : terms_) {
    r.add_term({m.x + 1, m.y, m.l}, c / Rational(m.x + 1));
  }
  return r;
}

ExactPoly ExactPoly::integrate_y() const {
  ExactPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.y == -1) {
      throw representation_error("integrate_y: y^-1 term has no Laurent antiderivative");
    }
    r.add_term({m.x, m.y + 1, m.l}, c / Rational(m.y + 1));
  }
  return r;
}

ExactPoly ExactPoly::mul_term(const Rational& c, int dx, int dy, int dl) const {
  ExactPoly r;
  if (c == 0) return r;
  for (const auto& [m, q] : terms_) {
    r.add_term({m.x + dx, m.y + dy, m.l + dl}, c * q);
  }
  return r;
}

ExactPoly ExactPoly::div_l(int k) const {
  ExactPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.l < k) {
      throw representation_error("div_l: term carries fewer than the divided powers of L");
    }
    r.terms_.emplace(Monomial{m.x, m.y, m.l - k}, c);
  }
  return r;
}

ExactPoly ExactPoly::scale_x(const Rational& c) const {
  ExactPoly r;
  for (const auto& [m, q] : terms_) {
    r.add_term(m, q * rational_pow(c, m.x));
  }
  return r;
}

ExactPoly ExactPoly::subs_y(const Rational& c) const {
  ExactPoly r;
  for (const auto& [m, q] : terms_) {
    if (c == 0) {
      if (m.y < 0) throw std::domain_error("subs_y: negative y power at y = 0");
      if (m.y > 0) continue;
      r.add_term(m, q);
    } else {
      r.add_term({m.x, 0, m.l}, q * rational_pow(c, m.y));
    }
  }
  return r;
}

ExactPoly ExactPoly::subs_l(const Rational& c) const {
  ExactPoly r;
  for (const auto& [m, q] : terms_) {
    r.add_term({m.x, m.y, 0}, q * rational_pow(c, m.l));
  }
  return r;
}

bool ExactPoly::has_negative_y_power() const {
  for (const auto& [m, c] : terms_) {
    if (m.y < 0) return true;
  }
  return false;
}

int ExactPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

Rational ExactPoly::coeff(int ex, int ey, int el) const {
  auto it = terms_.find({ex, ey, el});
  return it == terms_.end() ? Rational(0) : it->second;
}

double ExactPoly::eval(const DegenerateParam& p, double x, double y) const {
  // bucket by total degree, then accumulate buckets low-degree first
  std::map<int, double> buckets;
  for (const auto& [m, c] : terms_) {
    if (m.y < 0 && y == 0.0) {
      throw std::domain_error("ExactPoly::eval: negative y power at y = 0");
    }
    double t = c.get_d() * ipow(x, m.x) * ipow(y, m.y) * ipow(p.L, m.l);
    buckets[m.x + m.y + m.l] += t;
  }
  double sum = 0.0;
  for (const auto& [deg, v] : buckets) sum += v;
  return sum;
}

}  // namespace dhermite
