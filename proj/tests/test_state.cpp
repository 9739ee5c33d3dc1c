#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "slocc/errors.hpp"
#include "slocc/state.hpp"

using namespace slocc;

namespace {

const char* kGhzJson =
    R"({"m":2,"n":2,"gamma1":[[{"re":"1","im":"0"},{"re":"0","im":"0"}],[{"re":"0","im":"0"},{"re":"0","im":"0"}]],)"
    R"("gamma2":[[{"re":"0","im":"0"},{"re":"0","im":"0"}],[{"re":"0","im":"0"},{"re":"1","im":"0"}]]})";

}  // namespace

TEST(State, RejectsMismatchedSlices) {
  EXPECT_THROW(MatrixPair(Matrix(2, 2), Matrix(2, 3)), DimensionMismatch);
}

TEST(State, ReducedRanksOfGhz) {
  EXPECT_EQ(reduced_ranks(fixtures::ghz()), (ReducedRanks{2, 2, 2}));
  EXPECT_TRUE(is_genuine(fixtures::ghz()));
  EXPECT_TRUE(is_genuine(fixtures::w_state()));
}

TEST(State, ProductStateIsNotGenuine) {
  MatrixPair s(Matrix{{1, 0}, {0, 1}}, Matrix{{2, 0}, {0, 2}});
  EXPECT_EQ(reduced_ranks(s).r0, 1u);
  EXPECT_FALSE(is_genuine(s));
}

TEST(State, ZeroStateRanks) {
  EXPECT_EQ(reduced_ranks(fixtures::zero(2, 3)), (ReducedRanks{0, 0, 0}));
}

TEST(State, TrimDropsEmptyPlanes) {
  MatrixPair s(Matrix{{1, 0, 0}, {1, 0, 0}, {0, 0, 0}}, Matrix{{0, 1, 0}, {0, 1, 0}, {0, 0, 0}});
  TrimResult t = trim(s);
  EXPECT_EQ(t.m, 1u);
  EXPECT_EQ(t.n, 2u);
  EXPECT_EQ(reduced_ranks(t.pair), (ReducedRanks{2, 1, 2}));
  EXPECT_EQ(trim(t.pair).pair, t.pair);
}

TEST(State, TrimLeavesGenuineUntouched) {
  TrimResult t = trim(fixtures::w_state());
  EXPECT_EQ(t.pair, fixtures::w_state());
  EXPECT_FALSE(t.bipartite);
}

TEST(State, TrimOfZeroIsEmpty) {
  TrimResult t = trim(fixtures::zero(2, 2));
  EXPECT_EQ(t.m, 0u);
  EXPECT_EQ(t.n, 0u);
}

TEST(State, TrimmedPairReproducedByRecordedTransforms) {
  MatrixPair s(Matrix{{1, 2, 3}, {2, 4, 6}}, Matrix{{0, 1, 1}, {0, 2, 2}});
  TrimResult t = trim(s);
  EXPECT_EQ((t.p * s.gamma1() * t.q).block(0, 0, t.m, t.n), t.pair.gamma1());
  EXPECT_EQ((t.p * s.gamma2() * t.q).block(0, 0, t.m, t.n), t.pair.gamma2());
  EXPECT_TRUE((t.p * s.gamma1() * t.q).block(t.m, 0, s.m() - t.m, s.n()).is_zero());
}

TEST(State, OrientTransposesTallPairs) {
  MatrixPair tall(Matrix(3, 2), Matrix(3, 2));
  OrientResult o = transpose_orient(tall);
  EXPECT_TRUE(o.swapped);
  EXPECT_EQ(o.pair.m(), 2u);
  EXPECT_FALSE(transpose_orient(fixtures::ghz()).swapped);
}

TEST(State, ParsesGhzDocument) {
  EXPECT_EQ(parse_state(kGhzJson), fixtures::ghz());
}

TEST(State, SerializeRoundTrip) {
  MatrixPair s(Matrix{{GaussRat(mpq_class(-3, 2)), GaussRat::i()}}, Matrix{{0, GaussRat(1, 1)}});
  EXPECT_EQ(parse_state(serialize_state(s)), s);
  EXPECT_EQ(serialize_state(parse_state(kGhzJson)), std::string(kGhzJson));
}

TEST(State, MalformedDocuments) {
  EXPECT_THROW(parse_state("{\"m\":2"), MalformedInput);
  EXPECT_THROW(parse_state(R"({"m":1,"n":1,"gamma1":[[{"re":"1","im":"0"}]],"gamma2":[[{"re":"a","im":"0"}]]})"),
               MalformedInput);
  EXPECT_THROW(parse_state(R"({"m":1,"n":1,"gamma1":[[{"re":"1","im":"0"}]],"gamma2":[[{"re":"1"}]]})"),
               MalformedInput);
  EXPECT_THROW(parse_state(R"({"m":1,"n":1,"gamma1":[[{"re":"1","im":"0"}]],"gamma2":[[]]})"), DimensionMismatch);
  EXPECT_THROW(parse_state(R"({"m":1,"n":1,"gamma1":[],"gamma2":[],"x":1})"), MalformedInput);
}
