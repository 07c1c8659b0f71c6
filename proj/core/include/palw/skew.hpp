#pragma once

#include <vector>

#include "palw/lattice_fn.hpp"

namespace palw {

/// An integer function together with twice its center of skew-symmetry.
struct SkewPiece {
  IntFn fn;
  Point two_center;
};

/// True when there are r+1 pieces, each skew about its own center, and
/// their sum is f.
bool skew_split_valid(const std::vector<SkewPiece>& pieces, const IntFn& f);

/// Pieces skew about p, p + e_1/2, ..., p + e_r/2 (piece 0 first), where
/// two_p = 2p. Requires the total sum of f to vanish (HypothesisError).
///
/// The chain recursion along the last axis is used for both parities of
/// p_r. When p_r = 1/2 the leftover on the hyperplane x_r = 1 cannot be
/// pushed into pieces with those centers by recursion, so it is cleared by
/// transporting mass between reflections instead.
std::vector<SkewPiece> skew_split_half(const IntFn& f, const Point& two_p);

/// Pieces skew about p, p + e_1, ..., p + e_r, via the doubling maps
/// x -> 2x + v applied to every grid 2Z^r + v. Every grid sum of f must
/// vanish (HypothesisError).
std::vector<SkewPiece> skew_split_grid(const IntFn& f, const Point& p);

/// Pieces skew about c, c + e_1, ..., c + e_r with 2c = two_c, by mass
/// transport: the reflection through c followed by the one through
/// c + e_a translates by 2e_a, which carries every point to the
/// representative of its grid. The reflection through c swaps the grid v
/// with the grid two_c - v, so only the sum over each such pair of grids
/// must vanish (HypothesisError otherwise).
std::vector<SkewPiece> skew_split_fixed_centers(const IntFn& f, const Point& two_c);

/// Whether every pair of grids {v, two_c - v mod 2} has zero total.
bool paired_grid_sums_vanish(const IntFn& f, const Point& two_c);

}  // namespace palw
