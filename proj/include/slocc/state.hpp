#pragma once

// A 2 x M x N pure state stored as the pair of its two M x N qubit slices.

#include <cstddef>
#include <string>
#include <string_view>

#include "slocc/exactmath.hpp"

namespace slocc {

class MatrixPair {
 public:
  MatrixPair() = default;
  /// Throws DimensionMismatch unless both slices have the same shape.
  MatrixPair(Matrix gamma1, Matrix gamma2);

  std::size_t m() const { return gamma1_.rows(); }
  std::size_t n() const { return gamma1_.cols(); }
  const Matrix& gamma1() const { return gamma1_; }
  const Matrix& gamma2() const { return gamma2_; }
  Matrix& gamma1() { return gamma1_; }
  Matrix& gamma2() { return gamma2_; }

  MatrixPair transpose() const { return {gamma1_.transpose(), gamma2_.transpose()}; }
  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;

 private:
  Matrix gamma1_;
  Matrix gamma2_;
};

/// Ranks of the three single-party reduced density matrices.
struct ReducedRanks {
  std::size_t r0 = 0;  // qubit
  std::size_t r1 = 0;  // M-dimensional party
  std::size_t r2 = 0;  // N-dimensional party
  friend bool operator==(const ReducedRanks&, const ReducedRanks&) = default;
};

ReducedRanks reduced_ranks(const MatrixPair& s);
bool is_genuine(const MatrixPair& s);

struct TrimResult {
  MatrixPair pair;
  std::size_t m = 0;
  std::size_t n = 0;
  /// Qubit Gram rank is 1: the state is a product with the qubit.
  bool bipartite = false;
  /// Row and column compressions used: pair = rows of (p * s * q) and
  /// leading columns, i.e. pair = (p * s * q) restricted to m x n.
  Matrix p;
  Matrix q;
};

/// Moves the state onto its supporting row and column subspaces and drops
/// the resulting zero planes. Already-minimal inputs are returned unchanged.
TrimResult trim(const MatrixPair& s);

struct OrientResult {
  MatrixPair pair;
  bool swapped = false;
};

/// Transposes both slices when M > N.
OrientResult transpose_orient(const MatrixPair& s);

/// State JSON: {"m":..,"n":..,"gamma1":[[{"re":"p/q","im":"p/q"},..],..],"gamma2":..}
MatrixPair parse_state(std::string_view text);
std::string serialize_state(const MatrixPair& s);

}  // namespace slocc
