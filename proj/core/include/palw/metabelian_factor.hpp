#pragma once

#include <cstddef>
#include <vector>

#include "palw/factorization.hpp"
#include "palw/flow.hpp"

namespace palw {

/// One palindrome when every coefficient function of [x_i, x_j] is skew
/// about -(e_i + e_j)/2: with G the product of u [x_i,x_j]^{f(u)} u^{-1}
/// over one point u of each pair {u, -u - e_i - e_j}, the word is
/// G reverse(G). Throws HypothesisError if some function is not skew.
Word palindromize_skew(const SquareCoeffs& c);

/// Factors monomial(p) runs, one palindrome, inverse runs, for data skew
/// about p - (e_i + e_j)/2 for every pair.
std::vector<Word> palindromize_conjugated(const SquareCoeffs& c, const Point& p);

/// Whether every pair of grids {v, -(e_i + e_j) - v mod 2} has zero total
/// for every [x_i, x_j].
bool pair_grid_sums_vanish(const SquareCoeffs& c);

/// At most 3r + 1 palindromes for square data meeting the grid condition:
/// p0, then x_a P_a x_a^{-1} for each axis a. Throws HypothesisError when
/// the grid condition fails.
std::vector<Word> palindromize_gridzero(const SquareCoeffs& c);

struct BattlementEntry {
  int i = 0;
  int j = 1;
  GridVector grid{Point{0}};
  Integer d;
  Word q;
  /// At most 2r + 3 palindromes whose product is q.
  std::vector<Word> palindromes;
};

struct BattlementPlan {
  std::vector<BattlementEntry> entries;
  /// Product of the entry words, in entry order.
  Word q;
  SquareCoeffs q_coeffs;
  /// Input data plus q_coeffs; every grid sum vanishes.
  SquareCoeffs corrected;

  std::size_t palindrome_count() const;
};

/// Builds the correction word q so that the data of h q has zero grid
/// sums: for D = grid sum over 2Z^r + v of the [x_i, x_j] data,
///   q_v = m_v (x_j x_i x_j^{-1} x_i)^D x_i^{-2D} m_v^{-1},  m_v = monomial(v),
/// with the core inverted when D < 0.
BattlementPlan battlement_plan(const SquareCoeffs& c);
BattlementPlan battlement_correct(const FlowElement& h);

/// 2^{r-1} r (r+1) (2r+3) + 4r + 1.
std::size_t metabelian_bound(int rank);

struct MetabelianFactorization : Factorization<FlowElement> {
  std::size_t gridzero_count = 0;
  std::size_t battlement_count = 0;
  std::size_t coset_count = 0;
};

/// Coset runs x1^{a1}..xr^{ar}, then h = g (coset)^{-1} corrected by a
/// battlement word q; the factors are those of h q, then q^{-1}, then the
/// coset runs. Verified in the flow model before returning.
MetabelianFactorization factorize_metabelian(const FlowElement& g);

bool verify_metabelian(const Factorization<FlowElement>& fz);

}  // namespace palw
