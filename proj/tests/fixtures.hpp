#pragma once

#include <ostream>
#include <random>

#include "slocc/jordan.hpp"
#include "slocc/reduction.hpp"
#include "slocc/state.hpp"

namespace slocc {

inline void PrintTo(const ProjectivePoint& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const SegreSymbol& s, std::ostream* os) { *os << "{" << s.to_string() << "}"; }
inline void PrintTo(const MatrixPair& s, std::ostream* os) {
  *os << "(" << s.gamma1().to_string() << ", " << s.gamma2().to_string() << ")";
}

}  // namespace slocc

namespace fixtures {

using slocc::GaussRat;
using slocc::Matrix;
using slocc::MatrixPair;

inline MatrixPair ghz() { return {Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}}; }
inline MatrixPair w_state() { return {Matrix{{0, 1}, {1, 0}}, Matrix{{1, 0}, {0, 0}}}; }
inline MatrixPair zero(std::size_t m, std::size_t n) { return {Matrix(m, n), Matrix(m, n)}; }

inline Matrix small_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = GaussRat(mpq_class(static_cast<long>(rng() % 7) - 3), mpq_class(static_cast<long>(rng() % 7) - 3));
  return m;
}

inline Matrix small_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = small_matrix(rng, n, n);
    if (!slocc::determinant(m).is_zero()) return m;
  }
}

inline slocc::IloTriple local_random_ilo(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  return {small_invertible(rng, 2), small_invertible(rng, m), small_invertible(rng, n)};
}

/// 7 x 8 pairs from the deficient-case displays; "x" entries filled with a fixed A-block.
inline MatrixPair deficient_display(const std::vector<std::pair<std::size_t, std::size_t>>& ones, std::size_t a_dim) {
  Matrix g1(7, 8), g2(7, 8);
  for (std::size_t i = 0; i < 6; ++i) g1(i, i) = 1;
  for (auto [r, c] : ones) g2(r, c) = 1;
  for (std::size_t i = 0; i < a_dim; ++i) {
    g2(i, i) = GaussRat(static_cast<long>(i) + 2);
    if (i + 1 < a_dim) g2(i, i + 1) = 1;
  }
  return {g1, g2};
}

}  // namespace fixtures
