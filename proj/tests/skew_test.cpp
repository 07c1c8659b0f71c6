#include <gtest/gtest.h>

#include "palw/errors.hpp"
#include "palw/skew.hpp"
#include "support/generators.hpp"

namespace {

using palw::IntFn;
using palw::Point;
using palw::operator+;
using palw::operator-;
using palw::operator*;
using palw::SkewPiece;

// Direct check of the piece predicates: each piece is skew-symmetric about
// its own center and the pieces sum to f.
void expect_pieces(const std::vector<SkewPiece>& pieces, const IntFn& f,
                   const std::vector<Point>& centers) {
  ASSERT_EQ(pieces.size(), centers.size());
  IntFn sum(f.rank());
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    EXPECT_EQ(pieces[k].two_center, centers[k]);
    for (const auto& [x, v] : pieces[k].fn) {
      EXPECT_EQ(pieces[k].fn.get(centers[k] - x), -v) << palw::format_point(x);
      sum.add(x, v);
    }
  }
  EXPECT_EQ(sum, f);
  EXPECT_TRUE(palw::skew_split_valid(pieces, f));
}

TEST(SkewPredicates, SkewSymmetryIncludesTheFixedPoint) {
  IntFn f(1);
  f.add({0}, 1);
  EXPECT_FALSE(palw::is_skew_symmetric(f, {0}));
  f.add({2}, -1);
  f.add({0}, -1);
  f.add({-2}, 1);
  EXPECT_TRUE(palw::is_skew_symmetric(f, {0}));
}

TEST(SkewHalf, SmallDipole) {
  IntFn f(1);
  f.add({0}, 3);
  f.add({5}, -3);
  const auto pieces = palw::skew_split_half(f, {5});
  expect_pieces(pieces, f, {{5}, {6}});
}

TEST(SkewHalf, RejectsNonzeroTotal) {
  IntFn f(2);
  f.add({0, 0}, 1);
  EXPECT_THROW(palw::skew_split_half(f, {0, 0}), palw::HypothesisError);
}

TEST(SkewHalfProperty, RandomZeroSumFunctions) {
  gen::Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = static_cast<int>(gen::uniform(rng, 1, 3));
    const IntFn f = gen::random_zero_sum_fn(rng, r, 3, 9, 8);
    const Point two_p = gen::random_point(rng, r, 4);
    const auto pieces = palw::skew_split_half(f, two_p);
    std::vector<Point> centers{two_p};
    for (int a = 0; a < r; ++a) centers.push_back(two_p + palw::unit_point(r, a));
    expect_pieces(pieces, f, centers);
  }
}

TEST(SkewGridProperty, RandomGridZeroFunctions) {
  gen::Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = static_cast<int>(gen::uniform(rng, 1, 3));
    const IntFn f = gen::random_grid_zero_fn(rng, r, 3, 9, 6);
    const Point p = gen::random_point(rng, r, 3);
    std::vector<Point> centers{2 * p};
    for (int a = 0; a < r; ++a) centers.push_back(2 * p + palw::unit_point(r, a, 2));
    const auto pieces = palw::skew_split_grid(f, p);
    expect_pieces(pieces, f, centers);
  }
}

TEST(SkewGrid, RejectsNonzeroGridSum) {
  IntFn f(1);
  f.add({0}, 1);
  f.add({1}, -1);
  EXPECT_THROW(palw::skew_split_grid(f, {0}), palw::HypothesisError);
}

TEST(SkewFixedCentersProperty, RandomGridZeroFunctions) {
  gen::Rng rng(63);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = static_cast<int>(gen::uniform(rng, 1, 3));
    const IntFn f = gen::random_grid_zero_fn(rng, r, 3, 9, 6);
    const Point two_c = gen::random_point(rng, r, 3);
    ASSERT_TRUE(palw::paired_grid_sums_vanish(f, two_c));
    std::vector<Point> centers{two_c};
    for (int a = 0; a < r; ++a) centers.push_back(two_c + palw::unit_point(r, a, 2));
    expect_pieces(palw::skew_split_fixed_centers(f, two_c), f, centers);
  }
}

TEST(SkewFixedCenters, PairedGridCondition) {
  // Grid sums cancel in pairs {v, 2c - v} but not individually.
  IntFn f(1);
  f.add({0}, 1);
  f.add({1}, -1);
  EXPECT_TRUE(palw::paired_grid_sums_vanish(f, {-1}));
  expect_pieces(palw::skew_split_fixed_centers(f, {-1}), f, {{-1}, {1}});
  EXPECT_FALSE(palw::paired_grid_sums_vanish(f, {0}));
  EXPECT_THROW(palw::skew_split_fixed_centers(f, {0}), palw::HypothesisError);
}

TEST(SkewGrid, SingleDipoleGoesToTheShiftedCenter) {
  IntFn f(1);
  f.add({0}, 1);
  f.add({2}, -1);
  const auto pieces = palw::skew_split_grid(f, {0});
  expect_pieces(pieces, f, {{0}, {2}});
  EXPECT_TRUE(pieces[0].fn.is_zero());
  EXPECT_EQ(pieces[1].fn, f);
}

TEST(SkewGrid, MixedGridsInRankTwo) {
  IntFn f(2);
  f.add({0, 0}, 1);
  f.add({2, 0}, -1);
  f.add({1, 1}, 3);
  f.add({3, 3}, -3);
  expect_pieces(palw::skew_split_grid(f, {0, 0}), f, {{0, 0}, {2, 0}, {0, 2}});
}

TEST(SkewFixedCenters, AlreadySkewInputStaysInTheFirstPiece) {
  IntFn f(2);
  f.add({1, 0}, 1);
  f.add({-2, -1}, -1);
  const auto pieces = palw::skew_split_fixed_centers(f, {-1, -1});
  expect_pieces(pieces, f, {{-1, -1}, {1, -1}, {-1, 1}});
  EXPECT_EQ(pieces[0].fn, f);
}

}  // namespace
