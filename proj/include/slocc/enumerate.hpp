#pragma once

// Families of inequivalent genuine classes for fixed (M, N), their concrete
// representatives, and count tables.

#include <string>
#include <vector>

#include "slocc/canonical.hpp"

namespace slocc {

using Partition = std::vector<std::size_t>;

struct ClassFamily {
  /// Classification of the instance with default parameters.
  CanonicalForm canonical;
  /// Jordan block sizes per eigenvalue slot. Slots 0, 1, 2 sit at 0, inf, 1;
  /// later slots take the free parameters in order.
  std::vector<Partition> shape;
  std::vector<std::size_t> column_indices;
  std::vector<std::size_t> row_indices;
  std::size_t param_count = 0;
  std::string constraints;
  /// Encoding with the Segre points forgotten; equal for all instances.
  std::string key;
};

/// Segre partitions in canonical slot order.
std::vector<Partition> segre_shape(const SegreSymbol& segre);
/// encode(cf) with the point list replaced by the partition shape.
std::string skeleton_key(const CanonicalForm& cf);
bool matches_family(const ClassFamily& f, const CanonicalForm& cf);

/// Requires 1 <= m <= n <= 2m, else DimensionOutOfRange. With genuine_only
/// false, classes of lower local rank (trimmed to smaller dimensions, scalar
/// regular parts, the zero state) are listed too.
std::vector<ClassFamily> enumerate_families(std::size_t m, std::size_t n, bool genuine_only = true);

/// Throws ConstraintViolation on a wrong parameter count, a parameter equal to
/// 0 or 1, or two equal parameters.
MatrixPair instantiate(const ClassFamily& f, const std::vector<GaussRat>& params);
std::vector<GaussRat> default_params(const ClassFamily& f);

struct CountEntry {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t total = 0;
  /// Families of generic rank min(m, n); for m == n the regular pencils.
  std::size_t max_rank = 0;
};

/// Genuine family counts for 1 <= m <= maxM, m <= n <= min(2m, maxN).
std::vector<CountEntry> count_table(std::size_t max_m, std::size_t max_n);

std::string render_families(std::size_t m, std::size_t n, const std::vector<ClassFamily>& families);

}  // namespace slocc
