#pragma once

#include <gmpxx.h>

#include <string>

namespace dhermite {

using Rational = mpq_class;
using BigInt = mpz_class;

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// num/den as reduced integers; den > 0.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Integer power with negative exponents (base must be nonzero when e < 0).
Rational rational_pow(const Rational& base, int e);

}  // namespace dhermite
