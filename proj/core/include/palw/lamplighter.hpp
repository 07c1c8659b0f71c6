#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palw/wreath.hpp"
#include "palw/wreath_factor.hpp"

namespace palw {

/// Element of Z wr Z with machine-size lamp values. Lamps are sorted by
/// position and never zero.
struct LampElement {
  std::vector<std::pair<std::int64_t, std::int64_t>> lamps;
  std::int64_t pos = 0;

  std::int64_t at(std::int64_t x) const;
  void add(std::int64_t x, std::int64_t v);
  friend bool operator==(const LampElement&, const LampElement&) = default;
};

struct LampElementHash {
  std::size_t operator()(const LampElement& e) const;
};

/// Builds an element from (position, value) pairs; duplicates accumulate.
LampElement make_lamp_element(const std::vector<std::pair<std::int64_t, std::int64_t>>& lamps,
                              std::int64_t pos);
LampElement lamp_multiply(const LampElement& a, const LampElement& b);
LampElement lamp_invert(const LampElement& a);

/// Alphabet {a, t}: generator 0 is the lamp, generator 1 the step.
const Alphabet& lamplighter_alphabet();
LampElement lamp_evaluate(const Word& w);

/// Conversions to and from the generic Z wr Z element. Throws
/// std::invalid_argument if the element is not over Z with rank 1, and
/// std::overflow_error if a value does not fit in 64 bits.
LampElement to_lamp_element(const WreathGroup& group, const WreathElement& e);
WreathElement to_wreath_element(const WreathGroup& group, const LampElement& e);

/// f(x) == f(shift - x) for all x.
bool is_palindromic_element(const LampElement& e);

/// Walks to the leftmost lamp, sets the lamps left to right and walks to the
/// final position. Throws HypothesisError if `e` is not palindromic.
Word palindrome_for(const LampElement& e);

struct TwoPalDecomposition {
  LampElement g;  // first factor, shift p
  LampElement h;  // second factor, shift q
};

struct TwoPalVerdict {
  std::int64_t p = 0;
  std::optional<TwoPalDecomposition> decomposition;
  std::string contradiction;  // empty when a decomposition was found
};

/// Whether target = g * h with g, h palindromic and g of shift p. Values
/// outside the window [lo - |k| - 2, hi + |k| + 2] are pinned to zero, where
/// [lo, hi] is the hull of 0, p, k and the support of the target.
TwoPalVerdict two_palindrome_decision(const LampElement& target, std::int64_t p);

/// Interval of the propagation window used for a given p.
std::pair<std::int64_t, std::int64_t> two_pal_window(const LampElement& target, std::int64_t p);

struct TwoPalWitness {
  LampElement target;
  std::int64_t p_lo = 0;
  std::int64_t p_hi = 0;
  std::vector<TwoPalVerdict> verdicts;
  /// Support in {0,1}, f(0) != f(1) and shift 3.
  bool in_hypothesis = false;
  std::vector<Word> upper_factors;

  bool all_none() const;
};

/// Default scan radius |k| + support radius + 22.
std::int64_t default_scan_radius(const LampElement& target);

/// Runs the decision for every p in [min(0,k) - radius, max(0,k) + radius]
/// and attaches a factorization with at most three palindromes.
TwoPalWitness certify_width_three(const LampElement& target, std::int64_t scan_radius);

struct OracleResult {
  std::optional<std::size_t> minimum;  // empty when > max_factors
  bool budget_exceeded = false;
  std::size_t palindromes = 0;  // distinct palindromic elements of length <= max_len
};

/// Exhaustive search for the fewest palindromes of length <= max_len whose
/// product is the target. `budget` caps the number of stored products per
/// layer.
OracleResult minimal_palindromic_length_bfs(const LampElement& target, std::size_t max_len,
                                            std::size_t max_factors,
                                            std::size_t budget = 5'000'000);

}  // namespace palw
