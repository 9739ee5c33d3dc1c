#pragma once

// Exact arithmetic over the Gaussian rationals Q(i): scalars, dense
// matrices, univariate polynomials and polynomial matrices.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slocc {

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT: implicit from integers is convenient
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  GaussRat conj() const { return GaussRat(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Deterministic total order: real part first, imaginary part breaks ties.
  /// Carries no analytic meaning.
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

  /// Rational components rendered as "p/q" (q omitted when 1).
  std::string re_string() const;
  std::string im_string() const;
  /// Compact single-string form: "3/2", "-i", "1+2i", "1/2-3/4i".
  std::string to_string() const;
  static GaussRat parse_components(std::string_view re, std::string_view im);
  static GaussRat parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& x);
mpq_class parse_rational(std::string_view text);
std::string rational_string(const mpq_class& q);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<GaussRat>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  GaussRat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussRat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix adjoint() const;  // conjugate transpose
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// Rows/columns picked by index lists, in the given order.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  GaussRat trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussRat& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRat> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Horizontal and vertical concatenation.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  Matrix row_ops;  // row_ops * m == reduced
  std::vector<std::size_t> pivots;
};

std::size_t rank(const Matrix& m);
/// Same value as rank(), computed from ranks modulo primes p = 1 (mod 4)
/// above 2^60. Enough primes are used that, by the Hadamard bound, one of them
/// preserves a nonzero maximal minor; faster on large dense matrices.
std::size_t rank_multimodular(const Matrix& m);
RrefResult rref_with_transform(const Matrix& m);
/// Throws SingularMatrix.
Matrix invert(const Matrix& m);
GaussRat determinant(const Matrix& m);
/// Basis of the right null space, one column per basis vector.
Matrix nullspace(const Matrix& m);

/// Univariate polynomial over Q(i), coefficients stored lowest degree first.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(GaussRat c);  // NOLINT: constants convert implicitly
  explicit Poly(std::vector<GaussRat> coeffs);
  static Poly monomial(GaussRat c, std::size_t degree);
  /// t - root
  static Poly linear(const GaussRat& root);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRat>& coeffs() const { return c_; }
  GaussRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussRat(); }
  const GaussRat& leading() const { return c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  GaussRat eval(const GaussRat& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// a + t*b
  static PolyMatrix pencil(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Monic characteristic polynomial det(tI - m).
Poly charpoly(const Matrix& m);

struct RootMultiset {
  std::vector<std::pair<GaussRat, std::size_t>> roots;  // sorted by GaussRat order
  bool fully_split = false;
};

/// Roots of p lying in Q(i), found by exact divisor-candidate search.
RootMultiset roots_in_field(const Poly& p);

/// Invariant factors d1 | d2 | ... | dr (monic), r = rank over Q(i)(t).
std::vector<Poly> smith_form(const PolyMatrix& pm);

}  // namespace slocc
