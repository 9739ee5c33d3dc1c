#include "slocc/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gaussint.hpp"
#include "slocc/errors.hpp"

namespace slocc {

// ---------------------------------------------------------------- GaussRat

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("GaussRat division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return MalformedInput("invalid rational \"" + s + "\""); };
  if (s.empty()) throw bad();
  std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  mpz_class num, den = 1;
  if (slash == std::string::npos) {
    if (!digits(pos, s.size())) throw bad();
    num = mpz_class(s.substr(pos));
  } else {
    if (!digits(pos, slash) || !digits(slash + 1, s.size())) throw bad();
    num = mpz_class(s.substr(pos, slash - pos));
    den = mpz_class(s.substr(slash + 1));
    if (den == 0) throw MalformedInput("zero denominator in \"" + s + "\"");
  }
  if (s[0] == '-') num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string GaussRat::re_string() const { return rational_string(re_); }
std::string GaussRat::im_string() const { return rational_string(im_); }

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return re_string();
  std::string imag;
  mpq_class a = abs(im_);
  if (a != 1) imag = rational_string(a);
  imag += "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_string() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

GaussRat GaussRat::parse_components(std::string_view re, std::string_view im) {
  return GaussRat(parse_rational(re), parse_rational(im));
}

GaussRat GaussRat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw MalformedInput("empty Gaussian rational");
  if (s.back() != 'i') return GaussRat(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string t) {
    if (t.empty() || t == "+") return mpq_class(1);
    if (t == "-") return mpq_class(-1);
    return parse_rational(t);
  };
  if (split == std::string::npos) return GaussRat(mpq_class(0), imag_part(body));
  return GaussRat(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << x.to_string(); }

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussRat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussRat& x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

GaussRat Matrix::trace() const {
  GaussRat t;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussRat& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) p(r, c) += x * b(k, c);
      }
    }
  }
  return p;
}

Matrix operator*(const GaussRat& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

namespace {

// In-place Gauss-Jordan elimination; pivots always use the lowest-index
// nonzero row. When `ops` is non-null the same row operations are applied
// to it.
std::vector<std::size_t> eliminate(Matrix& m, Matrix* ops, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    auto swap_rows = [](Matrix& x, std::size_t a, std::size_t b) {
      for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(a, c), x(b, c));
    };
    if (piv != row) {
      swap_rows(m, piv, row);
      if (ops) swap_rows(*ops, piv, row);
    }
    GaussRat inv = GaussRat(1) / m(row, col);
    if (full) {
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
      if (ops)
        for (std::size_t c = 0; c < ops->cols(); ++c) (*ops)(row, c) *= inv;
    }
    for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussRat f = full ? m(r, col) : m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
      if (ops)
        for (std::size_t c = 0; c < ops->cols(); ++c) {
          if (!(*ops)(row, c).is_zero()) (*ops)(r, c) -= f * (*ops)(row, c);
        }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return eliminate(work, nullptr, false).size();
}

RrefResult rref_with_transform(const Matrix& m) {
  RrefResult out{m, Matrix::identity(m.rows()), {}};
  out.pivots = eliminate(out.reduced, &out.row_ops, true);
  return out;
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("invert needs a square matrix");
  Matrix work = m;
  Matrix ops = Matrix::identity(m.rows());
  if (eliminate(work, &ops, true).size() != m.rows()) throw SingularMatrix();
  return ops;
}

GaussRat determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant needs a square matrix");
  Matrix work = m;
  GaussRat det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work(piv, col).is_zero()) ++piv;
    if (piv == n) return GaussRat();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work(piv, c), work(col, c));
      det = -det;
    }
    det *= work(col, col);
    GaussRat inv = GaussRat(1) / work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      GaussRat f = work(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) work(r, c) -= f * work(col, c);
    }
  }
  return det;
}

Matrix nullspace(const Matrix& m) {
  RrefResult r = rref_with_transform(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(r.pivots[i], k) = -r.reduced(i, free[k]);
  }
  return basis;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(GaussRat c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(GaussRat c, std::size_t degree) {
  std::vector<GaussRat> v(degree + 1);
  v[degree] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear(const GaussRat& root) { return Poly(std::vector<GaussRat>{-root, GaussRat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  GaussRat inv = GaussRat(1) / leading();
  for (auto& x : p.c_) x *= inv;
  return p;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<GaussRat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
  return Poly(std::move(d));
}

GaussRat Poly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += c_[k];
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussRat> p(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) p[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(p);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(), *this};
  std::vector<GaussRat> rem = c_;
  std::vector<GaussRat> quo(c_.size() - d.c_.size() + 1);
  GaussRat inv = GaussRat(1) / d.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    GaussRat f = rem[k + d.c_.size() - 1] * inv;
    quo[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool bare = k > 0 && c_[k].is_one();
    if (!bare) os << (sgn(c_[k].im()) != 0 && sgn(c_[k].re()) != 0 ? "(" + c_[k].to_string() + ")" : c_[k].to_string());
    if (k > 0) os << (bare ? "" : "*") << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyMatrix PolyMatrix::pencil(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil shape mismatch");
  PolyMatrix pm(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) pm(r, c) = Poly(std::vector<GaussRat>{a(r, c), b(r, c)});
  return pm;
}

// ------------------------------------------------- characteristic polynomial

Poly charpoly(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("charpoly needs a square matrix");
  // Faddeev-LeVerrier; exact in characteristic zero.
  const std::size_t n = m.rows();
  std::vector<GaussRat> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t d = 0; d < n; ++d) mk(d, d) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / GaussRat(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

// ------------------------------------------------------------ root finding

namespace {

using detail::GaussInt;

// Scales p to Gaussian-integer coefficients with unit integer content.
std::vector<GaussInt> integer_coefficients(const Poly& p) {
  mpz_class l = 1;
  for (const auto& x : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  std::vector<GaussInt> out;
  mpz_class content = 0;
  for (const auto& x : p.coeffs()) {
    mpq_class re = x.re() * l, im = x.im() * l;
    out.push_back({re.get_num(), im.get_num()});
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().re.get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().im.get_mpz_t());
  }
  if (content > 1)
    for (auto& g : out) {
      g.re /= content;
      g.im /= content;
    }
  return out;
}

GaussRat to_rat(const GaussInt& g) { return GaussRat(mpq_class(g.re), mpq_class(g.im)); }

// Finds one root of p (degree >= 2, p(0) != 0) in Q(i), if any. Any root
// x = a/b in lowest terms has a | p(0) and b | lead(p) in Z[i].
bool find_one_root(const Poly& p, GaussRat& root) {
  auto coeffs = integer_coefficients(p);
  auto numerators = detail::gaussian_divisors(coeffs.front());
  auto denominators = detail::gaussian_divisors(coeffs.back());
  const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  // p(1) and p(-1) must be divisible by (b - a) and (-b - a) respectively.
  GaussInt at_one{0, 0}, at_minus_one{0, 0};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    at_one.re += coeffs[k].re;
    at_one.im += coeffs[k].im;
    at_minus_one.re += (k % 2 ? -1 : 1) * coeffs[k].re;
    at_minus_one.im += (k % 2 ? -1 : 1) * coeffs[k].im;
  }
  for (const auto& b : denominators) {
    GaussRat inv_b = GaussRat(1) / to_rat(b);
    for (const auto& a0 : numerators) {
      for (const auto& u : units) {
        GaussInt a = a0 * u;
        GaussInt q;
        GaussInt d1 = b - a;
        if (!d1.is_zero() && !at_one.is_zero() && !detail::exact_divide(at_one, d1, q)) continue;
        GaussInt d2 = GaussInt{-b.re, -b.im} - a;
        if (!d2.is_zero() && !at_minus_one.is_zero() && !detail::exact_divide(at_minus_one, d2, q)) continue;
        GaussRat x = to_rat(a) * inv_b;
        if (p.eval(x).is_zero()) {
          root = x;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

RootMultiset roots_in_field(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots_in_field of the zero polynomial");
  RootMultiset out;
  Poly squarefree = p / gcd(p, p.derivative());
  squarefree = squarefree.monic();
  std::vector<GaussRat> distinct;
  while (squarefree.degree() >= 1) {
    GaussRat r;
    if (squarefree.coeff(0).is_zero()) {
      r = GaussRat();
    } else if (squarefree.degree() == 1) {
      r = -squarefree.coeff(0) / squarefree.coeff(1);
    } else if (!find_one_root(squarefree, r)) {
      break;
    }
    distinct.push_back(r);
    squarefree = squarefree / Poly::linear(r);
  }
  std::sort(distinct.begin(), distinct.end());
  std::size_t total = 0;
  for (const auto& r : distinct) {
    std::size_t mult = 0;
    Poly rest = p;
    for (;;) {
      auto [q, rem] = rest.divmod(Poly::linear(r));
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.roots.push_back({r, mult});
    total += mult;
  }
  out.fully_split = static_cast<int>(total) == p.degree();
  return out;
}

// ---------------------------------------------------------------- Smith form

std::vector<Poly> smith_form(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
  };
  std::vector<Poly> factors;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      // Bring a nonzero entry of least degree to the pivot.
      int best = -1;
      std::size_t br = k, bc = k;
      for (std::size_t r = k; r < rows; ++r)
        for (std::size_t c = k; c < cols; ++c)
          if (!a(r, c).is_zero() && (best < 0 || a(r, c).degree() < best)) {
            best = a(r, c).degree();
            br = r;
            bc = c;
          }
      if (best < 0) return factors;
      swap_rows(k, br);
      swap_cols(k, bc);
      bool dirty = false;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (a(r, k).is_zero()) continue;
        Poly q = a(r, k) / a(k, k);
        for (std::size_t c = k; c < cols; ++c) a(r, c) -= q * a(k, c);
        if (!a(r, k).is_zero()) dirty = true;
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (a(k, c).is_zero()) continue;
        Poly q = a(k, c) / a(k, k);
        for (std::size_t r = k; r < rows; ++r) a(r, c) -= q * a(r, k);
        if (!a(k, c).is_zero()) dirty = true;
      }
      if (dirty) continue;
      // Pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t r = k + 1; r < rows && divides; ++r)
        for (std::size_t c = k + 1; c < cols; ++c)
          if (!(a(r, c) % a(k, k)).is_zero()) {
            for (std::size_t cc = k; cc < cols; ++cc) a(k, cc) += a(r, cc);
            divides = false;
            break;
          }
      if (divides) break;
    }
    factors.push_back(a(k, k).monic());
  }
  return factors;
}

}  // namespace slocc
