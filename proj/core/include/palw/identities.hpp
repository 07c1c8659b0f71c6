#pragma once

#include <cstddef>
#include <vector>

#include "palw/word.hpp"

namespace palw {

/// Palindromic factors kept literally, empty words included; `target` is
/// the word they multiply to in the free group.
struct PalindromicFactorList {
  std::vector<Word> factors;
  Word target;

  /// Number of nonempty factors.
  std::size_t count() const;
};

/// Every factor is a palindrome and the product freely reduces to the
/// same word as the target.
bool factor_list_valid(const PalindromicFactorList& list);

/// g b g^{-1} b^{-1} = (g b rev(g)) (rev(g)^{-1} g^{-1}) (b^{-1}).
/// Throws HypothesisError unless b is a single letter.
PalindromicFactorList commutator_three_palindromes(const Word& g, const Word& b);

/// h (g_1 ... g_2k) h^{-1} = (h g_1 rev(h)) (rev(h)^{-1} g_2 h^{-1}) ...,
/// over the nonempty factors, padded with one empty word when their number
/// is odd.
PalindromicFactorList conjugate_factorization(const Word& h, const PalindromicFactorList& list);

}  // namespace palw
