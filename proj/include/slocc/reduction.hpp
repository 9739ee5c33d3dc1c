#pragma once

// Constructive reduction of a matrix pair to its block normal form, with an
// exact record of every invertible local operation applied.

#include <cstddef>
#include <vector>

#include "slocc/exactmath.hpp"
#include "slocc/jordan.hpp"
#include "slocc/pencil.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Invertible local operators (T, P, Q) acting by
/// G'_i = sum_j t_ij * P * G_j * Q.
struct IloTriple {
  Matrix t;
  Matrix p;
  Matrix q;

  /// Throws SingularMatrix if any factor is singular, DimensionMismatch on bad shapes.
  static IloTriple make(Matrix t, Matrix p, Matrix q);
  static IloTriple identity(std::size_t m, std::size_t n);
  bool is_identity() const;
};

MatrixPair apply(const IloTriple& g, const MatrixPair& s);
/// The triple acting as `outer` after `inner`.
IloTriple compose(const IloTriple& outer, const IloTriple& inner);
IloTriple inverse(const IloTriple& g);

struct ReductionTranscript {
  std::vector<IloTriple> steps;
  IloTriple composite;

  static ReductionTranscript identity(std::size_t m, std::size_t n);
  void append(const IloTriple& step);
  void append(const ReductionTranscript& later);
};

enum class CaseFlag { zero, nonzero };

struct DeficiencyInfo {
  std::size_t zero_rows = 0;
  CaseFlag c_case = CaseFlag::zero;
  CaseFlag r_case = CaseFlag::zero;
  std::size_t c_rank = 0;
  std::size_t r_rank = 0;
  /// Row-side staircase: counts of deficient-row chains reaching depth 1, 2, ...
  std::vector<std::size_t> chain;
  friend bool operator==(const DeficiencyInfo&, const DeficiencyInfo&) = default;
};

/// Current partition of the working block: rows/columns `coords` carry the
/// A-block, `link_cols` the B-block.
struct WorkingBlock {
  std::vector<std::size_t> coords;
  std::vector<std::size_t> link_cols;
  bool terminal = false;
  std::size_t rows() const { return coords.size(); }
  std::size_t cols() const { return coords.size() + link_cols.size(); }
};

struct BlockNormalPair {
  MatrixPair pair;
  std::size_t square_block_dim = 0;
  /// Ranks r(E'), r(E''), ... in application order.
  std::vector<std::size_t> staircase;
  DeficiencyInfo deficiency;
  /// Coordinates that became staircase rows at each level, and the current
  /// residual A-block coordinates.
  std::vector<std::vector<std::size_t>> level_coords;
  std::vector<std::size_t> residual;
  /// Column minimal indices (ascending) and row minimal indices (ascending).
  std::vector<std::size_t> column_indices;
  std::vector<std::size_t> row_indices;
};

/// Moves the witness combination into the first slice and brings it to
/// [[I_n, 0], [0, 0]].
struct NormalizedPair {
  MatrixPair pair;
  ReductionTranscript transcript;
};
NormalizedPair normalize_leading(const MatrixPair& s, const ProjectivePoint& witness);

/// One column-reduction step on a pair with G1 = (I_m | 0), G2 = (A | B).
struct StepIResult {
  MatrixPair pair;
  ReductionTranscript transcript;
  std::size_t rB = 0;
  BlockNormalPair block;  // partition after the step, for step_ii
};
StepIResult step_i(const MatrixPair& s, std::size_t m);

/// Exposes the next working block of a partially reduced pair (no entry changes).
WorkingBlock step_ii(const BlockNormalPair& b);

struct ReductionResult {
  BlockNormalPair block;
  ReductionTranscript transcript;
};

/// Column staircase on a pair whose first slice is [[I_n, 0], [0, 0]];
/// the residual A-block is left unreduced.
ReductionResult staircase_reduce(const MatrixPair& s);

/// Column staircase followed by the row-side staircase on the residual when
/// the first slice has M - n zero rows; the residual is the regular block.
ReductionResult reduce_deficient(const MatrixPair& s, std::size_t n);

struct NormalForm {
  BlockNormalPair block;
  SegreSymbol raw_segre;  // eigenvalues of the regular block, finite, canonical order
  ReductionTranscript transcript;
};

/// Complete reduction of a normalized pair: staircases, Jordan form of the
/// regular block, and final block layout. The result pair equals
/// assemble_normal_pair(...) of the recovered invariants.
NormalForm reduce_normal_form(const MatrixPair& s);

/// Literal block normal form. Rows: [J | row chains | column chains, deepest
/// level first | deficient rows]; columns: [J | row chains | column chains |
/// input columns]. Index lists ascending; segre points finite.
MatrixPair assemble_normal_pair(const std::vector<std::size_t>& column_indices,
                                const std::vector<std::size_t>& row_indices, const SegreSymbol& segre);

}  // namespace slocc
