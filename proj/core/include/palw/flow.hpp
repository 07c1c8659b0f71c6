#pragma once

#include <map>
#include <utility>
#include <vector>

#include "palw/lattice_fn.hpp"
#include "palw/word.hpp"

namespace palw {

/// Directed edge of the grid graph of Z^r from `pos` to pos + e_axis.
struct Edge {
  Point pos;
  int axis = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Element of the free metabelian group of rank r: its image in Z^r and
/// the integer flow its paths leave on the grid graph. Divergence at w is
/// [w = 0] - [w = shift].
struct FlowElement {
  int rank = 1;
  Point shift;
  std::map<Edge, Integer> edges;

  friend bool operator==(const FlowElement&, const FlowElement&) = default;
};

/// Alphabet x1..xr.
Alphabet metabelian_alphabet(int rank);

FlowElement flow_identity(int rank);

/// Throws std::invalid_argument for letters outside x1..xr.
FlowElement flow_evaluate(const Word& w, int rank);
FlowElement flow_multiply(const FlowElement& a, const FlowElement& b);
FlowElement flow_invert(const FlowElement& a);
FlowElement flow_product(const std::vector<Word>& factors, int rank);

bool divergence_law_holds(const FlowElement& e);

/// x1^{u1} ... xr^{ur}.
Word monomial_word(const Point& u);

/// [x_i, x_j] = x_i x_j x_i^{-1} x_j^{-1} (0-based axes).
Word commutator_word(int i, int j);

/// Coefficient functions of the basic commutators [x_i, x_j], i < j
/// (0-based), so that the element is the product over u and pairs of
/// u [x_i,x_j]^{f(u)} u^{-1}. Pairs with zero functions are not stored.
struct SquareCoeffs {
  int rank = 1;
  std::map<std::pair<int, int>, IntFn> by_pair;

  IntFn get(int i, int j) const;
  void add(int i, int j, const Point& u, const Integer& c);
  friend bool operator==(const SquareCoeffs&, const SquareCoeffs&) = default;
};

SquareCoeffs square_coeffs_sum(const SquareCoeffs& a, const SquareCoeffs& b);

/// Flow of u [x_i, x_j] u^{-1} with u the lattice point `at`.
FlowElement square_flow(int rank, int i, int j, const Point& at);

/// Fills each edge loop path(u) x_i path(u + e_i)^{-1} with squares
/// [x_i, x_k], k > i, along the monomial path; summed over the edges this
/// recovers the circulation exactly. Requires shift 0 (HypothesisError);
/// the result is checked by rebuilding the flow.
SquareCoeffs circulation_to_squares(const FlowElement& h);

FlowElement squares_to_element(const SquareCoeffs& c);

/// (path(u) x_i path(u+e_i)^{-1})^{c} for every edge, then path(shift).
Word flow_to_word(const FlowElement& h);

/// The canonical word of the square data: u [x_i,x_j]^{c} u^{-1} per entry.
Word squares_to_word(const SquareCoeffs& c);

}  // namespace palw
