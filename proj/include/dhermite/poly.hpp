#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "dhermite/param.hpp"
#include "dhermite/rational.hpp"

namespace dhermite {

// Raised when an exact operation would leave the representable ring,
// e.g. dividing by L a term that carries no L factor.
struct representation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent triple of one monomial x^x * y^y * L^l.  x and l are nonnegative;
// y may be negative (Laurent powers appear in the Rodrigues construction).
struct Monomial {
  int x = 0;
  int y = 0;
  int l = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Exact multivariate Laurent polynomial over arbitrary-precision rationals in
// the indeterminates x, y and L, where L stands for log(1+lambda)/lambda and
// stays symbolic until eval() binds it.  Stored in canonical form: no zero
// coefficients, terms ordered lexicographically by (e_x, e_y, e_L).
class ExactPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  ExactPoly() = default;  // zero polynomial

  static ExactPoly constant(const Rational& c);
  static ExactPoly term(const Rational& c, int ex, int ey, int el);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

  ExactPoly& operator+=(const ExactPoly& rhs);
  ExactPoly& operator-=(const ExactPoly& rhs);
  friend ExactPoly operator+(ExactPoly lhs, const ExactPoly& rhs) { return lhs += rhs; }
  friend ExactPoly operator-(ExactPoly lhs, const ExactPoly& rhs) { return lhs -= rhs; }
  ExactPoly operator-() const;
  friend ExactPoly operator*(const ExactPoly& lhs, const ExactPoly& rhs);
  friend ExactPoly operator*(const Rational& c, const ExactPoly& p);

  // Formal partial derivatives; d/dy of y^k is k*y^(k-1) for every integer k.
  ExactPoly diff_x() const;
  ExactPoly diff_y() const;

  // Antiderivatives vanishing at 0.  integrate_y throws representation_error
  // on a y^-1 term (the antiderivative would not be a Laurent polynomial).
  ExactPoly integrate_x() const;
  ExactPoly integrate_y() const;

  // Multiplies the whole polynomial by c * x^dx * y^dy * L^dl.
  ExactPoly mul_term(const Rational& c, int dx, int dy, int dl) const;

  // Exact division by L^k (exponent decrement); throws representation_error
  // if any term carries fewer than k powers of L.
  ExactPoly div_l(int k) const;

  ExactPoly scale_x(const Rational& c) const;  // x -> c*x
  ExactPoly subs_y(const Rational& c) const;   // y -> c (c = 0 needs no negative y powers)
  ExactPoly subs_l(const Rational& c) const;   // L -> c

  bool has_negative_y_power() const;
  int degree_x() const;  // -1 for the zero polynomial
  Rational coeff(int ex, int ey, int el) const;

  // Numeric evaluation with L bound to p.L.  Terms are grouped by total
  // degree and the groups summed in increasing order to limit rounding.
  // Throws std::domain_error when a negative y power meets y = 0.
  double eval(const DegenerateParam& p, double x, double y) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

}  // namespace dhermite
