#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "slocc/errors.hpp"
#include "slocc/reduction.hpp"

using namespace slocc;

namespace {

SegreSymbol sym(std::vector<SegreEntry> e) {
  SegreSymbol s{std::move(e)};
  s.sort_canonical();
  return s;
}
ProjectivePoint fin(long v) { return ProjectivePoint::finite(v); }

// Random orbit member of a structure, then normalized for the reducers.
struct Prepared {
  MatrixPair original;
  NormalizedPair normalized;
};

Prepared prepare(const MatrixPair& canonical, std::mt19937_64& rng) {
  Prepared out{apply(fixtures::local_random_ilo(rng, canonical.m(), canonical.n()), canonical), {}};
  out.normalized = normalize_leading(out.original, generic_rank(out.original).witness);
  return out;
}

void expect_sound(const MatrixPair& input, const MatrixPair& output, const ReductionTranscript& t) {
  EXPECT_EQ(apply(t.composite, input), output);
  IloTriple acc = IloTriple::identity(input.m(), input.n());
  for (const auto& step : t.steps) {
    EXPECT_FALSE(determinant(step.t).is_zero());
    EXPECT_FALSE(determinant(step.p).is_zero());
    EXPECT_FALSE(determinant(step.q).is_zero());
    acc = compose(step, acc);
  }
  EXPECT_EQ(apply(acc, input), output);
}

}  // namespace

TEST(Ilo, SingularFactorRejected) {
  EXPECT_THROW(IloTriple::make(Matrix{{1, 1}, {1, 1}}, Matrix::identity(2), Matrix::identity(2)), SingularMatrix);
  EXPECT_THROW(IloTriple::make(Matrix::identity(3), Matrix::identity(2), Matrix::identity(2)), DimensionMismatch);
}

TEST(Ilo, GroupActionLaws) {
  std::mt19937_64 rng(1);
  MatrixPair s(fixtures::small_matrix(rng, 2, 3), fixtures::small_matrix(rng, 2, 3));
  IloTriple a = fixtures::local_random_ilo(rng, 2, 3), b = fixtures::local_random_ilo(rng, 2, 3);
  EXPECT_EQ(apply(compose(a, b), s), apply(a, apply(b, s)));
  EXPECT_EQ(apply(inverse(a), apply(a, s)), s);
}

TEST(NormalizeLeading, GhzBecomesIdentityFirstSlice) {
  auto g = fixtures::ghz();
  NormalizedPair n = normalize_leading(g, generic_rank(g).witness);
  EXPECT_EQ(n.pair.gamma1(), Matrix::identity(2));
  expect_sound(g, n.pair, n.transcript);
}

TEST(NormalizeLeading, AlreadyNormalIsIdentity) {
  MatrixPair s(Matrix{{1, 0, 0}, {0, 0, 0}}, Matrix{{2, 1, 0}, {0, 0, 1}});
  NormalizedPair n = normalize_leading(s, ProjectivePoint::finite(0));
  EXPECT_TRUE(n.transcript.steps.empty());
  EXPECT_EQ(n.pair, s);
}

TEST(NormalizeLeading, WitnessAtInfinity) {
  MatrixPair s(Matrix{{0, 0}, {0, 0}}, Matrix{{0, 1}, {1, 0}});
  NormalizedPair n = normalize_leading(s, generic_rank(s).witness);
  EXPECT_EQ(n.pair.gamma1(), Matrix::identity(2));
  expect_sound(s, n.pair, n.transcript);
}

TEST(StepI, ZeroInputBlockUnchanged) {
  MatrixPair s(Matrix{{1, 0, 0}, {0, 1, 0}}, Matrix{{3, 1, 0}, {0, 3, 0}});
  StepIResult r = step_i(s, 2);
  EXPECT_EQ(r.rB, 0u);
  EXPECT_EQ(r.pair, s);
}

TEST(StepI, SingleRow) {
  MatrixPair s(Matrix{{1, 0}}, Matrix{{1, 5}});
  StepIResult r = step_i(s, 1);
  EXPECT_EQ(r.rB, 1u);
  Matrix expected{{0, 1}};
  EXPECT_EQ(r.pair.gamma2(), expected);
  EXPECT_EQ(r.pair.gamma1(), s.gamma1());
  expect_sound(s, r.pair, r.transcript);
}

TEST(StepI, FourBySixRankTwoInputs) {
  std::mt19937_64 rng(2);
  Matrix g1(4, 6), g2 = fixtures::small_matrix(rng, 4, 6);
  for (std::size_t i = 0; i < 4; ++i) g1(i, i) = 1;
  MatrixPair s(g1, g2);
  StepIResult r = step_i(s, 4);
  EXPECT_EQ(r.rB, 2u);
  EXPECT_EQ(r.pair.gamma1(), g1);
  // pivot rows of the input block are (0 | I) and nothing else
  Matrix lower = r.pair.gamma2().block(2, 0, 2, 6);
  Matrix expected{{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  EXPECT_EQ(lower, expected);
  EXPECT_TRUE(r.pair.gamma2().block(0, 4, 2, 2).is_zero());
  expect_sound(s, r.pair, r.transcript);

  WorkingBlock wb = step_ii(r.block);
  EXPECT_EQ(wb.rows(), 2u);
  EXPECT_EQ(wb.cols(), 4u);
}

TEST(StepII, TerminalCases) {
  MatrixPair s(Matrix{{1, 0, 0}, {0, 1, 0}}, Matrix{{3, 1, 0}, {0, 3, 0}});
  StepIResult r = step_i(s, 2);
  EXPECT_TRUE(step_ii(r.block).terminal);
  BlockNormalPair empty;
  empty.pair = MatrixPair(Matrix{{1}}, Matrix{{0}});
  EXPECT_TRUE(step_ii(empty).terminal);
}

TEST(Staircase, UniqueFourBySixClassWithNoSquareBlock) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Prepared p = prepare(assemble_normal_pair({2, 2}, {}, {}), rng);
    ReductionResult r = staircase_reduce(p.normalized.pair);
    EXPECT_EQ(r.block.staircase, (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(r.block.square_block_dim, 0u);
    expect_sound(p.normalized.pair, r.block.pair, r.transcript);
  }
}

TEST(Staircase, RankTwoThenZero) {
  std::mt19937_64 rng(4);
  Prepared p = prepare(assemble_normal_pair({1, 1}, {}, sym({{fin(0), {1}}, {fin(1), {1}}})), rng);
  ReductionResult r = staircase_reduce(p.normalized.pair);
  EXPECT_EQ(r.block.staircase, (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.block.square_block_dim, 2u);
}

TEST(Staircase, SquareGenuineHasNoStaircase) {
  std::mt19937_64 rng(5);
  Prepared p = prepare(fixtures::ghz(), rng);
  ReductionResult r = staircase_reduce(p.normalized.pair);
  EXPECT_TRUE(r.block.staircase.empty());
  EXPECT_EQ(r.block.square_block_dim, 2u);
  EXPECT_EQ(r.block.deficiency, DeficiencyInfo{});
}

TEST(Deficient, DisplayWithoutCouplings) {
  MatrixPair s = fixtures::deficient_display({{4, 6}, {5, 7}, {6, 3}}, 3);
  ReductionResult r = reduce_deficient(s, 6);
  EXPECT_EQ(r.block.deficiency.zero_rows, 1u);
  EXPECT_EQ(r.block.deficiency.c_case, CaseFlag::zero);
  EXPECT_EQ(r.block.deficiency.r_case, CaseFlag::zero);
  EXPECT_EQ(r.block.square_block_dim, 3u);
  expect_sound(s, r.block.pair, r.transcript);
}

TEST(Deficient, RankTwoColumnAndRowCouplings) {
  MatrixPair s = fixtures::deficient_display({{1, 4}, {2, 5}, {3, 0}, {4, 6}, {5, 7}, {6, 3}}, 0);
  ReductionResult r = reduce_deficient(s, 6);
  EXPECT_EQ(r.block.deficiency.c_case, CaseFlag::nonzero);
  EXPECT_EQ(r.block.deficiency.c_rank, 2u);
  EXPECT_EQ(r.block.deficiency.r_case, CaseFlag::nonzero);
  EXPECT_EQ(r.block.column_indices, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(r.block.row_indices, (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.block.square_block_dim, 0u);
}

TEST(Deficient, CaseFlagsAreOrbitInvariant) {
  std::mt19937_64 rng(6);
  std::vector<MatrixPair> displays = {
      fixtures::deficient_display({{4, 6}, {5, 7}, {6, 3}}, 3),
      fixtures::deficient_display({{2, 5}, {4, 6}, {5, 7}, {6, 3}}, 2),
      fixtures::deficient_display({{3, 2}, {4, 6}, {5, 7}, {6, 3}}, 2),
      fixtures::deficient_display({{1, 4}, {2, 5}, {3, 0}, {4, 6}, {5, 7}, {6, 3}}, 0),
  };
  std::vector<std::pair<CaseFlag, CaseFlag>> expected = {{CaseFlag::zero, CaseFlag::zero},
                                                         {CaseFlag::nonzero, CaseFlag::zero},
                                                         {CaseFlag::zero, CaseFlag::nonzero},
                                                         {CaseFlag::nonzero, CaseFlag::nonzero}};
  for (std::size_t k = 0; k < displays.size(); ++k) {
    DeficiencyInfo base = reduce_deficient(displays[k], 6).block.deficiency;
    EXPECT_EQ(std::make_pair(base.c_case, base.r_case), expected[k]);
    for (int trial = 0; trial < 5; ++trial) {
      Prepared p = prepare(displays[k], rng);
      EXPECT_EQ(reduce_deficient(p.normalized.pair, 6).block.deficiency, base);
    }
  }
}

TEST(Deficient, FullRankInputIsVacuous) {
  std::mt19937_64 rng(7);
  Prepared p = prepare(fixtures::w_state(), rng);
  ReductionResult r = reduce_deficient(p.normalized.pair, 2);
  EXPECT_EQ(r.block.deficiency, DeficiencyInfo{});
}

TEST(NormalForm, RecoversRandomStructures) {
  std::mt19937_64 rng(8);
  struct Case {
    std::vector<std::size_t> eps, eta;
    SegreSymbol segre;
  };
  std::vector<Case> cases = {
      {{}, {}, sym({{fin(0), {1}}, {fin(1), {1}}})},
      {{}, {}, sym({{fin(0), {2}}})},
      {{1, 1}, {}, sym({{fin(3), {1}}, {fin(0), {1}}})},
      {{1, 2}, {}, sym({{fin(0), {1}}})},
      {{1, 3}, {}, {}},
      {{1}, {}, sym({{fin(2), {2, 1}}, {fin(-1), {1}}, {fin(0), {1}}})},
      {{1, 1}, {3}, {}},
      {{1, 2}, {1}, sym({{fin(0), {1}}})},
      {{2, 2}, {2}, {}},
      {{1, 1}, {1}, sym({{fin(2), {1}}, {fin(3), {1}}, {fin(4), {1}}})},
      {{0, 1}, {0}, sym({{fin(1), {1}}})},
      {{1}, {1}, {}},
  };
  for (const auto& c : cases) {
    MatrixPair canonical = assemble_normal_pair(c.eps, c.eta, c.segre);
    for (int trial = 0; trial < 4; ++trial) {
      Prepared p = prepare(canonical, rng);
      NormalForm nf = reduce_normal_form(p.normalized.pair);
      EXPECT_EQ(nf.block.column_indices, c.eps);
      EXPECT_EQ(nf.block.row_indices, c.eta);
      EXPECT_EQ(moebius_canonicalize(nf.raw_segre), moebius_canonicalize(c.segre));
      std::vector<std::size_t> conj;
      for (std::size_t lv = 1;; ++lv) {
        std::size_t k = static_cast<std::size_t>(std::count_if(c.eps.begin(), c.eps.end(), [&](auto e) { return e >= lv; }));
        if (k == 0) break;
        conj.push_back(k);
      }
      EXPECT_EQ(nf.block.staircase, conj);
      expect_sound(p.normalized.pair, nf.block.pair, nf.transcript);
    }
  }
}

TEST(NormalForm, AssembledLayoutMatchesDeficientDisplay) {
  // the rank-2 coupled display is already in block normal layout up to ordering
  MatrixPair a = assemble_normal_pair({2, 2}, {2}, {});
  EXPECT_EQ(a.m(), 7u);
  EXPECT_EQ(a.n(), 8u);
  EXPECT_EQ(rank(a.gamma1()), 6u);
}
