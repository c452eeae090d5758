#include <gtest/gtest.h>

#include "mafre/granular.hpp"

using namespace mafre;

TEST(GranularValue, ConstructsWithinRange) {
  const GranularValue v(7, 8);
  EXPECT_EQ(v.numerator(), 7);
  EXPECT_DOUBLE_EQ(v.to_double(), 0.875);
  EXPECT_TRUE(GranularValue(0, 8).is_bottom());
  EXPECT_EQ(GranularValue(0, 8), GranularLattice(8).bottom());
  EXPECT_THROW(GranularValue(9, 8), std::out_of_range);
  EXPECT_THROW(GranularValue(-1, 8), std::out_of_range);
  EXPECT_THROW(GranularValue(0, 0), std::out_of_range);
}

TEST(GranularValue, ComparesAsRationals) {
  EXPECT_EQ(GranularValue(1, 2), GranularValue(4, 8));
  EXPECT_LT(GranularValue(1, 3), GranularValue(3, 8));
  EXPECT_EQ(meet(GranularValue(3, 8), GranularValue(1, 2)), GranularValue(3, 8));
  EXPECT_EQ(join(GranularValue(3, 8), GranularValue(1, 2)), GranularValue(1, 2));
}

TEST(FormatLevel, ExactDecimalsOrFraction) {
  EXPECT_EQ(format_level(7, 8), "0.875");
  EXPECT_EQ(format_level(0, 8), "0");
  EXPECT_EQ(format_level(8, 8), "1");
  EXPECT_EQ(format_level(1, 4), "0.25");
  EXPECT_EQ(format_level(1, 3), "1/3");
}

TEST(FuzzySet, PointwiseOrderAndOps) {
  const FuzzySet a(4, {1, 2, 3});
  const FuzzySet b(4, {2, 2, 4});
  EXPECT_TRUE(a.leq(b));
  EXPECT_TRUE(a.strictly_less(b));
  EXPECT_FALSE(b.leq(a));
  EXPECT_FALSE(a.strictly_less(a));
  EXPECT_EQ(pointwise_meet(a, FuzzySet(4, {2, 0, 4})), FuzzySet(4, {1, 0, 3}));
  EXPECT_EQ(pointwise_join(a, FuzzySet(4, {2, 0, 4})), FuzzySet(4, {2, 2, 4}));
  EXPECT_EQ(a.level_sum(), 6u);
  const std::vector<std::size_t> idx = {2, 0};
  EXPECT_EQ(a.select(idx), FuzzySet(4, {3, 1}));
  EXPECT_EQ(a.to_string(), "(0.25, 0.5, 0.75)");
  EXPECT_EQ(FuzzySet::constant(4, 2, 4), FuzzySet(4, {4, 4}));
}

TEST(LevelMatrix, SlicesAndTranspose) {
  const LevelMatrix m(8, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(m.row(1), FuzzySet(8, {4, 5, 6}));
  EXPECT_EQ(m.column(2), FuzzySet(8, {3, 6}));
  const std::vector<std::size_t> cols = {0, 2};
  EXPECT_EQ(m.select_cols(cols), LevelMatrix(8, {{1, 3}, {4, 6}}));
  const std::vector<std::size_t> rows = {1};
  EXPECT_EQ(m.select_rows(rows), LevelMatrix(8, {{4, 5, 6}}));
  EXPECT_EQ(m.transposed(), LevelMatrix(8, {{1, 4}, {2, 5}, {3, 6}}));
  EXPECT_EQ(m.transposed().transposed(), m);
  EXPECT_EQ(m.to_nested(), (std::vector<std::vector<Level>>{{1, 2, 3}, {4, 5, 6}}));

  LevelMatrix x = m;
  x.set_column(1, FuzzySet(8, {0, 0}));
  EXPECT_EQ(x, LevelMatrix(8, {{1, 0, 3}, {4, 0, 6}}));
  EXPECT_THROW(x.at(2, 0), std::out_of_range);
  EXPECT_THROW(LevelMatrix(2, {{3}}), std::out_of_range);
}

TEST(Box, OdometerVisitsEveryPointOnce) {
  std::vector<Level> v(3, 0);
  const std::vector<Level> upper = {1, 2, 0};
  std::size_t visits = 0;
  std::vector<Level> last;
  do {
    ++visits;
    last = v;
  } while (next_in_box(v, upper));
  EXPECT_EQ(visits, 6u);
  EXPECT_EQ(box_volume(upper), 6u);
  EXPECT_EQ(last, (std::vector<Level>{1, 2, 0}));
  EXPECT_EQ(v, (std::vector<Level>{0, 0, 0}));
}

TEST(Box, VolumesSaturate) {
  EXPECT_EQ(cube_volume(8, 5), 59049u);
  EXPECT_EQ(cube_volume(1024, 20), UINT64_MAX);
  EXPECT_EQ(cube_volume(3, 0), 1u);
}
