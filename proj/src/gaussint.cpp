#include "gaussint.hpp"

#include <map>

namespace slocc::detail {

namespace {

// round(n / d) for d > 0
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class num = 2 * n + d;
  mpz_class den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussInt gauss_mod(const GaussInt& a, const GaussInt& b) {
  GaussInt num = a * b.conj();
  mpz_class n = b.norm();
  GaussInt q{round_div(num.re, n), round_div(num.im, n)};
  return a - q * b;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = gauss_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      mpz_class out;
      mpz_mod(out.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

GaussInt prime_above(const mpz_class& p) {
  // p = 1 mod 4: find x with x^2 = -1 mod p, then gcd(p, x + i) has norm p.
  mpz_class e1 = (p - 1) / 2, e2 = (p - 1) / 4, pm1 = p - 1;
  for (mpz_class c = 2;; ++c) {
    mpz_class t;
    mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e1.get_mpz_t(), p.get_mpz_t());
    if (t == pm1) {
      mpz_class x;
      mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e2.get_mpz_t(), p.get_mpz_t());
      return gauss_gcd(GaussInt{p, 0}, GaussInt{x, 1});
    }
  }
}

}  // namespace

bool exact_divide(const GaussInt& a, const GaussInt& d, GaussInt& quotient) {
  mpz_class n = d.norm();
  GaussInt num = a * d.conj();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t())) {
    return false;
  }
  mpz_divexact(quotient.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(quotient.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
  return true;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 20000 && n > 1; ++p) {
    if (p * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::vector<GaussInt> gaussian_divisors(const GaussInt& z) {
  std::vector<std::pair<GaussInt, unsigned>> primes;
  for (const auto& [p, e] : factor_integer(z.norm())) {
    if (p == 2) {
      primes.push_back({GaussInt{1, 1}, e});
    } else if (p % 4 == 3) {
      primes.push_back({GaussInt{p, 0}, e / 2});
    } else {
      GaussInt pi = prime_above(p);
      unsigned k = 0;
      GaussInt rest = z, q;
      while (exact_divide(rest, pi, q)) {
        rest = q;
        ++k;
      }
      if (k > 0) primes.push_back({pi, k});
      if (e > k) primes.push_back({pi.conj(), e - k});
    }
  }
  std::vector<GaussInt> divisors{GaussInt{1, 0}};
  for (const auto& [pi, e] : primes) {
    std::vector<GaussInt> next;
    for (const auto& d : divisors) {
      GaussInt power{1, 0};
      for (unsigned k = 0; k <= e; ++k) {
        next.push_back(d * power);
        power = power * pi;
      }
    }
    divisors = std::move(next);
  }
  return divisors;
}

}  // namespace slocc::detail
