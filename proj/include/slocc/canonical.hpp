#pragma once

// The complete SLOCC class label of a 2 x M x N state and the top-level
// classify / equivalence operations.

#include <string>
#include <string_view>
#include <vector>

#include "slocc/jordan.hpp"
#include "slocc/pencil.hpp"
#include "slocc/reduction.hpp"
#include "slocc/state.hpp"

namespace slocc {

struct CanonicalForm {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t m_trim = 0;
  std::size_t n_trim = 0;
  bool genuine = false;
  PencilSignature sig;
  std::vector<std::size_t> staircase;  // non-increasing
  DeficiencyInfo deficiency;
  SegreSymbol segre;  // Moebius-canonical
  std::string encoding;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.encoding == b.encoding; }
};

/// Deterministic byte string of all structural fields.
std::string encode(const CanonicalForm& cf);

/// Column minimal indices (ascending) from a staircase of counts #{e >= 1}, #{e >= 2}, ...
std::vector<std::size_t> indices_from_levels(const std::vector<std::size_t>& levels);
std::vector<std::size_t> levels_from_indices(const std::vector<std::size_t>& indices);

/// Literal block normal pair for the given structure. A point at infinity is
/// moved to a finite position by z -> z / (z - a), a the first of -1, -2, ...
/// not among the finite points, so that the first slice stays [[I, 0], [0, 0]].
MatrixPair realize_normal_form(const std::vector<std::size_t>& column_indices,
                               const std::vector<std::size_t>& row_indices, const SegreSymbol& segre);

/// The canonical pair of cf, in its trimmed dimensions.
MatrixPair canonical_pair(const CanonicalForm& cf);

/// (n, l) with l read off the canonical pair at every eigenvalue point of cf.
PencilSignature signature(const MatrixPair& s, const CanonicalForm& cf);

struct ClassifyDetail {
  CanonicalForm form;
  bool swapped = false;  // input was transposed to M <= N
  TrimResult trimmed;
  /// The regular block's raw Jordan data and the T factor that produced it:
  /// an eigenvalue mu of the block corresponds to the pencil combination
  /// (t21 - mu*t11) G1 + (t22 - mu*t12) G2 of the oriented input.
  SegreSymbol raw_segre;
  Matrix t;
  MoebiusMap moebius;  // form.segre == apply_moebius(moebius, raw_segre)
  BlockNormalPair block;
};

/// Throws EigenvalueOutsideField when the regular part has eigenvalues outside Q(i).
ClassifyDetail classify_detailed(const MatrixPair& s);
CanonicalForm classify(const MatrixPair& s);
bool equivalent(const MatrixPair& a, const MatrixPair& b);

std::string render(const CanonicalForm& cf);
/// Throws MalformedInput on schema violations, unknown fields, or an
/// encoding that does not match the fields.
CanonicalForm parse_cf(std::string_view text);

}  // namespace slocc
