#pragma once

// Independent checks of the classifier: random local operations, orbit
// sweeps, Smith-form invariants and stabilizer dimensions.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slocc/canonical.hpp"

namespace slocc {

/// Entries are Gaussian integers with components in [-3, 3]; each factor is
/// resampled until invertible. Same seed, same triple.
IloTriple random_ilo(std::size_t m, std::size_t n, std::uint64_t seed);

struct OrbitFailure {
  std::uint64_t seed = 0;
  std::string expected;
  std::string got;
};

struct OrbitReport {
  std::size_t trials = 0;
  std::vector<OrbitFailure> failures;
};

using Classifier = std::function<CanonicalForm(const MatrixPair&)>;

/// Trial t uses the t-th output of a generator seeded with `seed`.
OrbitReport orbit_invariance(const MatrixPair& s, std::size_t trials, std::uint64_t seed,
                             const Classifier& classifier = classify);
std::string render_report(const OrbitReport& r);

struct PencilInvariants {
  /// Invariant factors of G1 + t*G2 and of G2 + u*G1.
  std::vector<Poly> invariant_factors;
  std::vector<Poly> infinite_factors;
  /// Elementary divisors as a Segre symbol; mu is a point when G2 - mu*G1 drops rank.
  SegreSymbol divisors;
  /// Minimal indices, ascending, zeros included.
  std::vector<std::size_t> column_indices;
  std::vector<std::size_t> row_indices;
};

/// Throws EigenvalueOutsideField when an invariant factor does not split over Q(i).
PencilInvariants pencil_invariants_oracle(const MatrixPair& s);

/// Disagreements between the oracle and classify_detailed(s); empty when consistent.
std::vector<std::string> oracle_mismatches(const MatrixPair& s);

/// Nullity of the linearized action (tau, p, q) -> sum_j tau_ij G_j + p G_i + G_i q.
std::size_t stabilizer_dimension(const MatrixPair& s);

}  // namespace slocc
