#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "palw/factorization.hpp"
#include "palw/symmetric_split.hpp"
#include "palw/wreath.hpp"

namespace palw {

enum class SnakeVariant {
  // Box [-n, n]^r, walked by a palindrome with net displacement 0.
  kSymmetric,
  // Box [-n, n+1] along the distinguished axis and [-n, n] elsewhere,
  // walked by a palindrome with net displacement e_axis followed by the
  // single letter x_axis^{-1}.
  kHalfShifted,
};

/// A snake word together with the insertion offset for every point of the
/// box it sweeps.
struct SnakePlan {
  int rank = 1;
  std::int64_t radius = 0;
  SnakeVariant variant = SnakeVariant::kSymmetric;
  int axis = 0;
  Word word;
  /// Length of the leading palindrome (the whole word for kSymmetric).
  std::size_t palindrome_length = 0;
  /// Box point -> number of letters of `word` read before its insertion slot.
  std::map<Point, std::size_t> prefix_index;

  bool contains(const Point& x) const { return prefix_index.count(x) != 0; }
};

/// Snake over the box of radius n. The core path is
///   s_1 = y_1^{2n}   (y_1^{2n+1} for kHalfShifted),
///   s_k = (s_{k-1} y_k s_{k-1}^{-1} y_k)^n s_{k-1},
/// where y_1 = x_axis and y_2.. are the remaining axes in increasing order;
/// it is framed as y_1^{-n}..y_r^{-n} s_r y_r^{-n}..y_1^{-n}.
SnakePlan build_snake(const WreathGroup& group, std::int64_t n, SnakeVariant variant,
                      int axis = 0);

/// Smallest radius whose box (for the given variant) contains supp(f).
std::int64_t snake_radius_for(const LatticeFn<Word>& f, SnakeVariant variant, int axis);

/// The snake word with f(x) inserted at the slot of every box point x.
/// Throws std::invalid_argument when supp(f) leaves the box.
Word inject(const SnakePlan& plan, const LatticeFn<Word>& f);

using WreathFactorization = Factorization<WreathElement>;

/// At most 3r + PW(G) palindromes: a base factorization of gamma, the
/// symmetric snake carrying f0, one half-shifted snake per fi, and the
/// lattice shift with the trailing x_i^{-1} folded into its first run.
WreathFactorization factorize_wreath(const WreathGroup& group, const WreathElement& e);

/// Rank 1 only: at most 2 + PW(G) palindromes, using the refined split.
WreathFactorization factorize_wreath_z(const WreathGroup& group, const WreathElement& e);

/// Every factor is a palindrome, the count is within the bound and the
/// product evaluates to the target.
bool verify_factorization(const WreathGroup& group, const WreathFactorization& fz);

}  // namespace palw
