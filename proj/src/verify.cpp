#include "slocc/verify.hpp"

#include <json.hpp>

#include <random>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long re = static_cast<long>(rng() % 7) - 3;
        long im = static_cast<long>(rng() % 7) - 3;
        out(i, j) = GaussRat(re, im);
      }
    }
    if (!determinant(out).is_zero()) return out;
  }
}

// Coefficient matrix of x(t) = x_0 + ... + x_d t^d in (a + t b) x(t) = 0.
Matrix stacked(const Matrix& a, const Matrix& b, std::size_t d) {
  Matrix out((d + 2) * a.rows(), (d + 1) * a.cols());
  for (std::size_t j = 0; j <= d; ++j) {
    out.set_block(j * a.rows(), j * a.cols(), a);
    out.set_block((j + 1) * a.rows(), j * a.cols(), b);
  }
  return out;
}

std::vector<std::size_t> minimal_indices(const Matrix& a, const Matrix& b) {
  // dim ker stacked(d) = sum over indices e <= d of (d - e + 1)
  std::vector<std::size_t> out;
  std::size_t prev_kernel = 0, prev_count = 0;
  for (std::size_t d = 0; d <= a.cols(); ++d) {
    Matrix k = stacked(a, b, d);
    std::size_t kernel = k.cols() - rank(k);
    std::size_t at_most_d = kernel - prev_kernel;
    out.insert(out.end(), at_most_d - prev_count, d);
    prev_kernel = kernel;
    prev_count = at_most_d;
  }
  return out;
}

void add_divisors(SegreSymbol& out, const ProjectivePoint& point, std::size_t size) {
  for (auto& e : out.entries) {
    if (e.point == point) {
      e.blocks.push_back(size);
      std::sort(e.blocks.rbegin(), e.blocks.rend());
      return;
    }
  }
  out.entries.push_back({point, {size}});
}

RootMultiset split(const Poly& p) {
  RootMultiset r = roots_in_field(p);
  if (!r.fully_split) throw EigenvalueOutsideField("invariant factor " + p.to_string() + " does not split over Q(i)");
  return r;
}

}  // namespace

IloTriple random_ilo(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix t = random_invertible(rng, 2);
  Matrix p = random_invertible(rng, m);
  Matrix q = random_invertible(rng, n);
  return IloTriple::make(std::move(t), std::move(p), std::move(q));
}

OrbitReport orbit_invariance(const MatrixPair& s, std::size_t trials, std::uint64_t seed,
                             const Classifier& classifier) {
  OrbitReport report;
  report.trials = trials;
  std::string expected = classifier(s).encoding;
  std::mt19937_64 seeds(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::uint64_t trial_seed = seeds();
    std::string got = classifier(apply(random_ilo(s.m(), s.n(), trial_seed), s)).encoding;
    if (got != expected) report.failures.push_back({trial_seed, expected, got});
  }
  return report;
}

std::string render_report(const OrbitReport& r) {
  nlohmann::ordered_json doc;
  doc["trials"] = r.trials;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json e;
    e["seed"] = f.seed;
    e["expected"] = f.expected;
    e["got"] = f.got;
    failures.push_back(e);
  }
  doc["failures"] = failures;
  return doc.dump();
}

PencilInvariants pencil_invariants_oracle(const MatrixPair& s) {
  PencilInvariants out;
  out.invariant_factors = smith_form(PolyMatrix::pencil(s.gamma1(), s.gamma2()));
  out.infinite_factors = smith_form(PolyMatrix::pencil(s.gamma2(), s.gamma1()));
  // G1 + t G2 singular at t0: mu = -1/t0, or mu = inf for t0 = 0.
  for (const auto& f : out.invariant_factors) {
    for (const auto& [root, mult] : split(f).roots) {
      ProjectivePoint mu = root.is_zero() ? ProjectivePoint::infinity() : ProjectivePoint::finite(-(GaussRat(1) / root));
      add_divisors(out.divisors, mu, mult);
    }
  }
  // G2 + u G1 at u = 0 covers mu = 0.
  for (const auto& f : out.infinite_factors) {
    std::size_t mult = 0;
    while (mult <= static_cast<std::size_t>(f.degree()) && f.coeff(mult).is_zero()) ++mult;
    if (mult > 0) add_divisors(out.divisors, ProjectivePoint::finite(0), mult);
  }
  out.divisors.sort_canonical();
  out.column_indices = minimal_indices(s.gamma1(), s.gamma2());
  out.row_indices = minimal_indices(s.gamma1().transpose(), s.gamma2().transpose());
  return out;
}

std::vector<std::string> oracle_mismatches(const MatrixPair& s) {
  std::vector<std::string> out;
  PencilInvariants inv = pencil_invariants_oracle(s);
  ClassifyDetail d = classify_detailed(s);
  const CanonicalForm& cf = d.form;

  const auto& cols = d.swapped ? inv.row_indices : inv.column_indices;
  const auto& rows = d.swapped ? inv.column_indices : inv.row_indices;
  std::size_t m = d.swapped ? s.n() : s.m();
  std::size_t n = d.swapped ? s.m() : s.n();
  auto zeros = [](const std::vector<std::size_t>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), std::size_t{0}));
  };
  if (cf.staircase != levels_from_indices(cols)) out.push_back("column minimal indices disagree with staircase");
  if (cf.deficiency.chain != levels_from_indices(rows)) out.push_back("row minimal indices disagree with chain");
  if (cf.n_trim != n - zeros(cols) || cf.m_trim != m - zeros(rows)) out.push_back("trimmed dimensions disagree");
  if (cf.m_trim > 0 && cf.sig.n != n - cols.size()) out.push_back("generic rank disagrees");

  // Raw block eigenvalue mu sits at (t11 mu - t21) / (t22 - t12 mu) in the input.
  MoebiusMap to_input{d.t(0, 0), -d.t(1, 0), -d.t(0, 1), d.t(1, 1)};
  SegreSymbol raw_in_input = apply_moebius(to_input, d.raw_segre);
  if (raw_in_input.to_string() != inv.divisors.to_string()) {
    out.push_back("elementary divisors " + inv.divisors.to_string() + " vs reduction " + raw_in_input.to_string());
  }
  if (apply_moebius(d.moebius, d.raw_segre).to_string() != cf.segre.to_string()) {
    out.push_back("recorded Moebius map does not produce the canonical symbol");
  }
  if (moebius_canonicalize(inv.divisors).to_string() != cf.segre.to_string()) {
    out.push_back("canonical symbol " + cf.segre.to_string() + " vs oracle " +
                  moebius_canonicalize(inv.divisors).to_string());
  }
  return out;
}

std::size_t stabilizer_dimension(const MatrixPair& s) {
  const std::size_t m = s.m(), n = s.n();
  const Matrix* g[2] = {&s.gamma1(), &s.gamma2()};
  // unknowns: tau (4), p (m*m), q (n*n); equations: entry (i, r, c) of the derivative
  const std::size_t p0 = 4, q0 = 4 + m * m;
  Matrix sys(2 * m * n, 4 + m * m + n * n);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t eq = (i * m + r) * n + c;
        for (std::size_t j = 0; j < 2; ++j) sys(eq, 2 * i + j) += (*g[j])(r, c);
        for (std::size_t k = 0; k < m; ++k) sys(eq, p0 + r * m + k) += (*g[i])(k, c);
        for (std::size_t k = 0; k < n; ++k) sys(eq, q0 + k * n + c) += (*g[i])(r, k);
      }
    }
  }
  return sys.cols() - rank_multimodular(sys);
}

}  // namespace slocc
