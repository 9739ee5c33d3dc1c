#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "slocc/exactmath.hpp"

namespace slocc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for 64-bit inputs
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct Prime {
  u64 p;
  u64 sqrt_minus_one;
};

const Prime& prime_at(std::size_t k) {
  static std::vector<Prime> primes;
  u64 next = primes.empty() ? (u64{1} << 60) + 1 : primes.back().p + 4;
  while (primes.size() <= k) {
    while (!is_prime(next)) next += 4;
    u64 c = 2;
    while (powmod(c, (next - 1) / 2, next) != next - 1) ++c;
    primes.push_back({next, powmod(c, (next - 1) / 4, next)});
    next += 4;
  }
  return primes[k];
}

struct GaussInt {
  mpz_class re, im;
};

std::size_t rank_mod(const std::vector<std::vector<GaussInt>>& a, std::size_t cols, const Prime& pr) {
  const u64 p = pr.p;
  std::vector<std::vector<u64>> w(a.size(), std::vector<u64>(cols));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      u64 re = mpz_fdiv_ui(a[r][c].re.get_mpz_t(), p);
      u64 im = mpz_fdiv_ui(a[r][c].im.get_mpz_t(), p);
      w[r][c] = (re + mulmod(im, pr.sqrt_minus_one, p)) % p;
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < w.size(); ++c) {
    std::size_t piv = rank;
    while (piv < w.size() && w[piv][c] == 0) ++piv;
    if (piv == w.size()) continue;
    std::swap(w[piv], w[rank]);
    u64 inv = powmod(w[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < w.size(); ++r) {
      if (w[r][c] == 0) continue;
      u64 f = mulmod(w[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) {
        u64 sub = mulmod(f, w[rank][k], p);
        w[r][k] = w[r][k] >= sub ? w[r][k] - sub : w[r][k] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_multimodular(const Matrix& m) {
  // Scale each row to Gaussian integers; rank is unchanged.
  std::vector<std::vector<GaussInt>> a;
  double bits = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      l = lcm(l, m(r, c).re().get_den());
      l = lcm(l, m(r, c).im().get_den());
    }
    std::vector<GaussInt> row(m.cols());
    mpz_class norm = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row[c].re = m(r, c).re().get_num() * (l / m(r, c).re().get_den());
      row[c].im = m(r, c).im().get_num() * (l / m(r, c).im().get_den());
      norm += row[c].re * row[c].re + row[c].im * row[c].im;
    }
    if (norm == 0) continue;
    bits += static_cast<double>(mpz_sizeinbase(norm.get_mpz_t(), 2));
    a.push_back(std::move(row));
  }
  if (a.empty()) return 0;
  // |minor|^2 < 2^bits, and a prime p > 2^60 can kill it only if p divides
  // that norm, which happens for fewer than bits / 60 primes.
  const auto needed = static_cast<std::size_t>(bits / 60) + 1;
  const std::size_t cap = std::min(a.size(), m.cols());
  std::size_t best = 0;
  for (std::size_t k = 0; k < needed && best < cap; ++k) best = std::max(best, rank_mod(a, m.cols(), prime_at(k)));
  return best;
}

}  // namespace slocc
