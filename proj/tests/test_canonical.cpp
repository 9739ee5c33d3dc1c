#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "slocc/canonical.hpp"
#include "slocc/errors.hpp"

using namespace slocc;

namespace {

SegreSymbol sym(std::vector<SegreEntry> e) {
  SegreSymbol s{std::move(e)};
  s.sort_canonical();
  return s;
}
ProjectivePoint fin(long v) { return ProjectivePoint::finite(v); }
const ProjectivePoint kInf = ProjectivePoint::infinity();

MatrixPair diag_pair(long a, long b) { return {Matrix::identity(2), Matrix{{a, 0}, {0, b}}}; }

}  // namespace

TEST(Classify, Ghz) {
  CanonicalForm cf = classify(fixtures::ghz());
  EXPECT_EQ(cf.m_trim, 2u);
  EXPECT_EQ(cf.n_trim, 2u);
  EXPECT_TRUE(cf.genuine);
  EXPECT_EQ(cf.sig, (PencilSignature{2, 1}));
  EXPECT_TRUE(cf.staircase.empty());
  EXPECT_EQ(cf.segre, sym({{fin(0), {1}}, {kInf, {1}}}));
}

TEST(Classify, W) {
  CanonicalForm cf = classify(fixtures::w_state());
  EXPECT_TRUE(cf.genuine);
  EXPECT_EQ(cf.sig, (PencilSignature{2, 1}));
  EXPECT_TRUE(cf.staircase.empty());
  EXPECT_EQ(cf.segre, sym({{fin(0), {2}}}));
}

TEST(Classify, FourBySixUniqueRegularFreeClass) {
  std::mt19937_64 rng(1);
  MatrixPair canon = assemble_normal_pair({2, 2}, {}, {});
  CanonicalForm base = classify(canon);
  EXPECT_EQ(base.staircase, (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(base.segre.entries.empty());
  EXPECT_TRUE(base.genuine);
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(classify(apply(fixtures::local_random_ilo(rng, 4, 6), canon)).encoding, base.encoding);
  }
}

TEST(Classify, ZeroState) {
  CanonicalForm cf = classify(fixtures::zero(2, 3));
  EXPECT_EQ(cf.m_trim, 0u);
  EXPECT_FALSE(cf.genuine);
  EXPECT_EQ(cf.sig, (PencilSignature{0, 0}));
}

TEST(Classify, TallInputIsOriented) {
  std::mt19937_64 rng(2);
  MatrixPair wide = assemble_normal_pair({1, 2}, {}, sym({{fin(0), {1}}}));
  CanonicalForm a = classify(apply(fixtures::local_random_ilo(rng, 4, 6), wide).transpose());
  EXPECT_EQ(a.m, 6u);
  EXPECT_EQ(a.staircase, (std::vector<std::size_t>{2, 1}));
}

TEST(Classify, ReducedDimensionsRecorded) {
  // product of the qubit with a bipartite state, padded with an empty row
  MatrixPair s(Matrix{{1, 0}, {0, 1}, {0, 0}}, Matrix{{2, 0}, {0, 2}, {0, 0}});
  CanonicalForm cf = classify(s);
  EXPECT_FALSE(cf.genuine);
  EXPECT_EQ(cf.m_trim, 2u);
  EXPECT_EQ(cf.n_trim, 2u);
  EXPECT_EQ(cf.segre, sym({{fin(0), {1, 1}}}));
}

TEST(Signature, EmptyPlanesPairHasFullMinimumRank) {
  MatrixPair s(Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}});
  CanonicalForm cf = classify(s);
  EXPECT_EQ(cf.sig, (PencilSignature{2, 2}));
}

TEST(Signature, MinimumRankMatchesBlockCountFormula) {
  std::vector<SegreSymbol> shapes = {sym({{fin(0), {2, 1}}, {kInf, {1}}}), sym({{fin(0), {1, 1, 1}}, {fin(1), {1}}}),
                                     sym({{fin(0), {3}}, {fin(1), {1}}})};
  for (const auto& s : shapes) {
    CanonicalForm cf = classify(realize_normal_form({}, {}, s));
    std::size_t most = 0;
    for (const auto& e : s.entries) most = std::max(most, e.blocks.size());
    EXPECT_EQ(cf.sig.l, cf.sig.n - most);
  }
}

TEST(Equivalent, Examples) {
  std::mt19937_64 rng(3);
  EXPECT_TRUE(equivalent(fixtures::ghz(), apply(fixtures::local_random_ilo(rng, 2, 2), fixtures::ghz())));
  EXPECT_FALSE(equivalent(fixtures::ghz(), fixtures::w_state()));
  EXPECT_TRUE(equivalent(diag_pair(5, 7), diag_pair(2, 11)));
}

TEST(Render, GhzSegreJson) {
  std::string json = render(classify(fixtures::ghz()));
  EXPECT_NE(json.find(R"("segre":[["0",[1]],["inf",[1]]])"), std::string::npos);
}

TEST(Render, RoundTrip) {
  std::vector<MatrixPair> states = {fixtures::ghz(), fixtures::w_state(), fixtures::zero(1, 1),
                                    fixtures::deficient_display({{1, 4}, {2, 5}, {3, 0}, {4, 6}, {5, 7}, {6, 3}}, 0),
                                    realize_normal_form({1}, {}, sym({{ProjectivePoint::finite(GaussRat(1, 1)), {1}},
                                                                      {fin(0), {1}}, {fin(1), {1}}, {kInf, {1}}}))};
  for (const auto& s : states) {
    CanonicalForm cf = classify(s);
    CanonicalForm back = parse_cf(render(cf));
    EXPECT_EQ(back, cf);
    EXPECT_EQ(render(back), render(cf));
    EXPECT_EQ(encode(back), cf.encoding);
  }
}

TEST(Render, RejectsBadDocuments) {
  std::string json = render(classify(fixtures::ghz()));
  std::string extra = json.substr(0, json.size() - 1) + R"(,"x":1})";
  EXPECT_THROW(parse_cf(extra), MalformedInput);
  EXPECT_THROW(parse_cf("[1,2]"), MalformedInput);
  std::string tampered = json;
  tampered.replace(tampered.find("\"sig\":[2,1]"), 11, "\"sig\":[2,2]");
  EXPECT_THROW(parse_cf(tampered), MalformedInput);
}

TEST(Classify, IdempotentThroughCanonicalPair) {
  std::mt19937_64 rng(4);
  std::vector<MatrixPair> states = {
      fixtures::ghz(), fixtures::w_state(), assemble_normal_pair({1, 2}, {}, sym({{fin(0), {1}}})),
      fixtures::deficient_display({{2, 5}, {4, 6}, {5, 7}, {6, 3}}, 2),
      realize_normal_form({}, {}, sym({{fin(0), {1}}, {fin(1), {1}}, {fin(4), {1}}, {kInf, {1}}}))};
  for (const auto& s : states) {
    CanonicalForm cf = classify(apply(fixtures::local_random_ilo(rng, s.m(), s.n()), s));
    EXPECT_EQ(classify(canonical_pair(cf)), cf);
    EXPECT_EQ(classify(s), cf);
  }
}

TEST(Classify, IrrationalEigenvaluesRefused) {
  MatrixPair s(Matrix::identity(2), Matrix{{0, 2}, {1, 0}});
  EXPECT_THROW(classify(s), EigenvalueOutsideField);
}

TEST(Levels, ConjugateRoundTrip) {
  std::vector<std::size_t> idx{1, 1, 3, 4};
  EXPECT_EQ(levels_from_indices(idx), (std::vector<std::size_t>{4, 2, 2, 1}));
  EXPECT_EQ(indices_from_levels(levels_from_indices(idx)), idx);
}
