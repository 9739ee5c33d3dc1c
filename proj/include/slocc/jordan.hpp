#pragma once

// Jordan structure of the regular part and its normalization under
// projective changes of the pencil parameter.

#include <string>
#include <vector>

#include "slocc/exactmath.hpp"
#include "slocc/pencil.hpp"

namespace slocc {

struct SegreEntry {
  ProjectivePoint point;
  std::vector<std::size_t> blocks;  // descending

  std::size_t multiplicity() const;
  friend bool operator==(const SegreEntry&, const SegreEntry&) = default;
};

struct SegreSymbol {
  std::vector<SegreEntry> entries;

  std::size_t dimension() const;
  /// Sort entries: descending multiplicity, then descending blocks, then ascending point.
  void sort_canonical();
  std::string to_string() const;
  friend bool operator==(const SegreSymbol&, const SegreSymbol&) = default;
};

/// Strict weak order used for both entry sorting and symbol comparison.
bool canonical_less(const SegreEntry& a, const SegreEntry& b);
bool canonical_less(const SegreSymbol& a, const SegreSymbol& b);

struct JordanResult {
  SegreSymbol segre;  // finite points only, canonical order
  Matrix s;           // s^-1 * a * s == jordan_matrix(segre)
};

/// Throws EigenvalueOutsideField when charpoly(a) does not split over Q(i).
JordanResult jordan_form(const Matrix& a);

/// Block-diagonal upper Jordan matrix in entry order; all points must be finite.
Matrix jordan_matrix(const SegreSymbol& segre);

/// z -> (a z + b) / (c z + d) acting on homogeneous coordinates.
struct MoebiusMap {
  GaussRat a{1}, b{0}, c{0}, d{1};

  ProjectivePoint operator()(const ProjectivePoint& p) const;
  /// (*this)(other(p))
  MoebiusMap after(const MoebiusMap& other) const;
  MoebiusMap inverse() const;
  /// The map sending p0 -> 0, p1 -> 1, p2 -> inf (points distinct).
  static MoebiusMap to_standard_triple(const ProjectivePoint& p0, const ProjectivePoint& p1,
                                       const ProjectivePoint& p2);
  /// The map sending p0 -> 0, p1 -> inf.
  static MoebiusMap to_zero_infinity(const ProjectivePoint& p0, const ProjectivePoint& p1);
};

SegreSymbol apply_moebius(const MoebiusMap& f, const SegreSymbol& s);

struct MoebiusNormalized {
  SegreSymbol segre;
  MoebiusMap map;  // segre == apply_moebius(map, raw)
};

MoebiusNormalized moebius_normalize(const SegreSymbol& raw);
SegreSymbol moebius_canonicalize(const SegreSymbol& raw);

}  // namespace slocc
