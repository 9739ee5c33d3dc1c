#include "slocc/pencil.hpp"

#include "slocc/errors.hpp"

namespace slocc {

std::pair<GaussRat, GaussRat> ProjectivePoint::homogeneous() const {
  if (is_infinity()) return {GaussRat(1), GaussRat(0)};
  return {*value_, GaussRat(1)};
}

ProjectivePoint ProjectivePoint::from_homogeneous(const GaussRat& x, const GaussRat& y) {
  if (y.is_zero()) {
    if (x.is_zero()) throw ConstraintViolation("(0 : 0) is not a projective point");
    return infinity();
  }
  return finite(x / y);
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
  }
  return a.value() <=> b.value();
}

std::string ProjectivePoint::to_string() const { return is_infinity() ? "inf" : value_->to_string(); }

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return finite(GaussRat::parse(text));
}

std::size_t rank_at(const MatrixPair& s, const ProjectivePoint& p) {
  if (p.is_infinity()) return rank(s.gamma2());
  return rank(s.gamma1() + p.value() * s.gamma2());
}

std::vector<ProjectivePoint> probe_grid(std::size_t m) {
  std::vector<ProjectivePoint> grid{ProjectivePoint::finite(0), ProjectivePoint::infinity()};
  for (std::size_t k = 1; k <= m + 1; ++k) grid.push_back(ProjectivePoint::finite(static_cast<long>(k)));
  return grid;
}

GenericRank generic_rank(const MatrixPair& s) {
  GenericRank best{0, ProjectivePoint::finite(0)};
  bool first = true;
  std::size_t cap = std::min(s.m(), s.n());
  for (const auto& p : probe_grid(s.m())) {
    std::size_t r = rank_at(s, p);
    if (first || r > best.n) best = {r, p};
    first = false;
    if (best.n == cap) break;
  }
  return best;
}

ProjectivePoint probe_for_eigenpoint(const ProjectivePoint& mu) {
  // G2 - mu*G1 is proportional to G1 + v*G2 with v = -1/mu.
  if (mu.is_infinity()) return ProjectivePoint::finite(0);
  if (mu.value().is_zero()) return ProjectivePoint::infinity();
  return ProjectivePoint::finite(GaussRat(-1) / mu.value());
}

}  // namespace slocc
