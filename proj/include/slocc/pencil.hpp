#pragma once

// Rank behaviour of the pencil alpha*G1 + beta*G2 over the projective line.

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "slocc/exactmath.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// A point (alpha : beta) of P^1 over Q(i). Finite(v) is (1 : v), Infinity is (0 : 1).
/// The same type labels pencil eigenvalue points in Segre symbols, where a
/// finite value mu means G2 - mu*G1 drops rank and Infinity means G1 does.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  static ProjectivePoint finite(GaussRat v) { return ProjectivePoint(std::move(v)); }
  static ProjectivePoint infinity() { return ProjectivePoint(); }

  bool is_infinity() const { return !value_.has_value(); }
  const GaussRat& value() const { return *value_; }

  /// Homogeneous coordinates (x : y) with finite v as (v : 1) and Infinity as (1 : 0).
  std::pair<GaussRat, GaussRat> homogeneous() const;
  static ProjectivePoint from_homogeneous(const GaussRat& x, const GaussRat& y);

  /// GaussRat order on finite values, Infinity greatest.
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) = default;

  /// "inf" or the compact GaussRat string.
  std::string to_string() const;
  static ProjectivePoint parse(const std::string& text);

 private:
  explicit ProjectivePoint(GaussRat v) : value_(std::move(v)) {}
  std::optional<GaussRat> value_;
};

struct PencilSignature {
  std::size_t n = 0;  // maximum rank
  std::size_t l = 0;  // minimum rank
  friend bool operator==(const PencilSignature&, const PencilSignature&) = default;
};

/// rank(G1 + v*G2) for Finite(v); rank(G2) for Infinity.
std::size_t rank_at(const MatrixPair& s, const ProjectivePoint& p);

/// The probe sequence 0, inf, 1, 2, ..., M+1.
std::vector<ProjectivePoint> probe_grid(std::size_t m);

struct GenericRank {
  std::size_t n = 0;
  ProjectivePoint witness;
};

/// Maximum rank over P^1 with the first probe point attaining it.
GenericRank generic_rank(const MatrixPair& s);

/// The probe point at which the combination G2 - mu*G1 is evaluated by
/// rank_at, for an eigenvalue point mu.
ProjectivePoint probe_for_eigenpoint(const ProjectivePoint& mu);

}  // namespace slocc
