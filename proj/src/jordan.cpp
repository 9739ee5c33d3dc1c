#include "slocc/jordan.hpp"

#include <algorithm>
#include <numeric>

#include "slocc/errors.hpp"

namespace slocc {

std::size_t SegreEntry::multiplicity() const { return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}); }

std::size_t SegreSymbol::dimension() const {
  std::size_t d = 0;
  for (const auto& e : entries) d += e.multiplicity();
  return d;
}

namespace {

std::strong_ordering entry_cmp(const SegreEntry& a, const SegreEntry& b) {
  std::size_t ma = a.multiplicity(), mb = b.multiplicity();
  if (ma != mb) return ma > mb ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.blocks != b.blocks) return a.blocks > b.blocks ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.point <=> b.point;
}

}  // namespace

bool canonical_less(const SegreEntry& a, const SegreEntry& b) { return entry_cmp(a, b) < 0; }

bool canonical_less(const SegreSymbol& a, const SegreSymbol& b) {
  return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                                b.entries.end(), entry_cmp) < 0;
}

void SegreSymbol::sort_canonical() {
  for (auto& e : entries) std::sort(e.blocks.begin(), e.blocks.end(), std::greater<>());
  std::sort(entries.begin(), entries.end(), [](const SegreEntry& a, const SegreEntry& b) { return canonical_less(a, b); });
}

std::string SegreSymbol::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ';';
    out += entries[i].point.to_string() + ':';
    for (std::size_t j = 0; j < entries[i].blocks.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(entries[i].blocks[j]);
    }
  }
  return out;
}

namespace {

Matrix column(const Matrix& m, std::size_t c) { return m.block(0, c, m.rows(), 1); }

struct Chain {
  Matrix head;
  std::size_t length;
};

}  // namespace

JordanResult jordan_form(const Matrix& a) {
  const std::size_t n = a.rows();
  if (!a.is_square()) throw DimensionMismatch("jordan_form needs a square matrix");
  JordanResult out{{}, Matrix(n, n)};
  if (n == 0) return out;

  Poly cp = charpoly(a);
  RootMultiset roots = roots_in_field(cp);
  if (!roots.fully_split) {
    throw EigenvalueOutsideField("characteristic polynomial " + cp.to_string() + " does not split over Q(i)");
  }

  struct PointChains {
    SegreEntry entry;
    std::vector<std::vector<Matrix>> columns;  // per block, chain vectors in Jordan order
  };
  std::vector<PointChains> found;

  for (const auto& [lambda, mult] : roots.roots) {
    Matrix nil = a - lambda * Matrix::identity(n);
    std::vector<Matrix> kernels{Matrix(n, 0)};
    std::vector<std::size_t> dims{0};
    Matrix power = Matrix::identity(n);
    while (dims.back() < mult) {
      power = power * nil;
      kernels.push_back(nullspace(power));
      dims.push_back(kernels.back().cols());
    }
    const std::size_t depth = dims.size() - 1;
    auto d = [&](std::size_t k) { return dims[std::min(k, depth)]; };

    std::vector<Chain> chains;
    for (std::size_t k = depth; k >= 1; --k) {
      std::size_t needed = (d(k) - d(k - 1)) - (d(k + 1) - d(k));
      Matrix basis = kernels[k - 1];
      for (const auto& ch : chains) {
        Matrix v = ch.head;
        for (std::size_t j = k; j < ch.length; ++j) v = nil * v;
        basis = hstack(basis, v);
      }
      std::size_t r = rank(basis);
      for (std::size_t c = 0; c < kernels[k].cols() && needed > 0; ++c) {
        Matrix v = column(kernels[k], c);
        Matrix extended = hstack(basis, v);
        if (rank(extended) > r) {
          basis = std::move(extended);
          ++r;
          --needed;
          chains.push_back({v, k});
        }
      }
      if (needed != 0) throw UnsupportedStructure("Jordan chain construction failed");
    }

    PointChains pc{{ProjectivePoint::finite(lambda), {}}, {}};
    for (const auto& ch : chains) {
      pc.entry.blocks.push_back(ch.length);
      std::vector<Matrix> cols(ch.length);
      Matrix v = ch.head;
      for (std::size_t j = ch.length; j-- > 0;) {
        cols[j] = v;
        v = nil * v;
      }
      pc.columns.push_back(std::move(cols));
    }
    found.push_back(std::move(pc));
  }

  std::sort(found.begin(), found.end(),
            [](const PointChains& x, const PointChains& y) { return canonical_less(x.entry, y.entry); });
  std::size_t col = 0;
  for (const auto& pc : found) {
    out.segre.entries.push_back(pc.entry);
    for (const auto& chain : pc.columns)
      for (const auto& v : chain) out.s.set_block(0, col++, v);
  }
  return out;
}

Matrix jordan_matrix(const SegreSymbol& segre) {
  const std::size_t n = segre.dimension();
  Matrix j(n, n);
  std::size_t at = 0;
  for (const auto& e : segre.entries) {
    if (e.point.is_infinity()) throw ConstraintViolation("Jordan matrix needs finite eigenvalues");
    for (std::size_t b : e.blocks) {
      for (std::size_t k = 0; k < b; ++k) {
        j(at + k, at + k) = e.point.value();
        if (k + 1 < b) j(at + k, at + k + 1) = 1;
      }
      at += b;
    }
  }
  return j;
}

ProjectivePoint MoebiusMap::operator()(const ProjectivePoint& p) const {
  auto [x, y] = p.homogeneous();
  return ProjectivePoint::from_homogeneous(a * x + b * y, c * x + d * y);
}

MoebiusMap MoebiusMap::after(const MoebiusMap& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

MoebiusMap MoebiusMap::inverse() const { return {d, -b, -c, a}; }

namespace {

GaussRat det(const ProjectivePoint& u, const ProjectivePoint& v) {
  auto [ux, uy] = u.homogeneous();
  auto [vx, vy] = v.homogeneous();
  return ux * vy - uy * vx;
}

}  // namespace

MoebiusMap MoebiusMap::to_standard_triple(const ProjectivePoint& p0, const ProjectivePoint& p1,
                                          const ProjectivePoint& p2) {
  // z -> det(z,p0) det(p1,p2) : det(z,p2) det(p1,p0)
  GaussRat d12 = det(p1, p2), d10 = det(p1, p0);
  auto [x0, y0] = p0.homogeneous();
  auto [x2, y2] = p2.homogeneous();
  return {y0 * d12, -x0 * d12, y2 * d10, -x2 * d10};
}

MoebiusMap MoebiusMap::to_zero_infinity(const ProjectivePoint& p0, const ProjectivePoint& p1) {
  auto [x0, y0] = p0.homogeneous();
  auto [x1, y1] = p1.homogeneous();
  return {y0, -x0, y1, -x1};
}

SegreSymbol apply_moebius(const MoebiusMap& f, const SegreSymbol& s) {
  SegreSymbol out = s;
  for (auto& e : out.entries) e.point = f(e.point);
  out.sort_canonical();
  return out;
}

MoebiusNormalized moebius_normalize(const SegreSymbol& raw) {
  const auto& e = raw.entries;
  std::vector<MoebiusMap> candidates;
  if (e.size() == 1) {
    if (e[0].point.is_infinity()) {
      candidates.push_back({0, 1, 1, 0});
    } else {
      candidates.push_back({1, -e[0].point.value(), 0, 1});
    }
  } else if (e.size() == 2) {
    candidates.push_back(MoebiusMap::to_zero_infinity(e[0].point, e[1].point));
    candidates.push_back(MoebiusMap::to_zero_infinity(e[1].point, e[0].point));
  } else if (e.size() >= 3) {
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        for (std::size_t k = 0; k < e.size(); ++k)
          if (i != j && j != k && i != k)
            candidates.push_back(MoebiusMap::to_standard_triple(e[i].point, e[j].point, e[k].point));
  }
  MoebiusNormalized best{raw, MoebiusMap{}};
  best.segre.sort_canonical();
  bool first = true;
  for (const auto& f : candidates) {
    SegreSymbol img = apply_moebius(f, raw);
    if (first || canonical_less(img, best.segre)) best = {std::move(img), f};
    first = false;
  }
  return best;
}

SegreSymbol moebius_canonicalize(const SegreSymbol& raw) { return moebius_normalize(raw).segre; }

}  // namespace slocc
