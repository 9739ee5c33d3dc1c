#pragma once

// Gaussian integers Z[i] with factorization, used to generate exact root
// candidates for polynomials over Q(i).

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace slocc::detail {

struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

/// Exact quotient a / d if d divides a in Z[i].
bool exact_divide(const GaussInt& a, const GaussInt& d, GaussInt& quotient);

/// Prime factorization of n > 0 as (prime, exponent) pairs, ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

/// One representative of every associate class of divisors of z != 0.
std::vector<GaussInt> gaussian_divisors(const GaussInt& z);

}  // namespace slocc::detail
