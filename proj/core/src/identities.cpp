#include "palw/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "palw/errors.hpp"

namespace palw {

std::size_t PalindromicFactorList::count() const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const Word& w) { return !w.empty(); }));
}

bool factor_list_valid(const PalindromicFactorList& list) {
  Word product;
  for (const Word& w : list.factors) {
    if (!is_palindrome(w)) return false;
    product *= w;
  }
  return free_reduce(product) == free_reduce(list.target);
}

PalindromicFactorList commutator_three_palindromes(const Word& g, const Word& b) {
  if (b.size() != 1) throw HypothesisError("b must be a single letter");
  const Word g_rev = reverse(g);
  PalindromicFactorList out;
  out.factors = {g * b * g_rev, invert(g_rev) * invert(g), invert(b)};
  out.target = g * b * invert(g) * invert(b);
  return out;
}

PalindromicFactorList conjugate_factorization(const Word& h, const PalindromicFactorList& list) {
  std::vector<Word> padded;
  for (const Word& w : list.factors) {
    if (!w.empty()) padded.push_back(w);
  }
  if (padded.size() % 2 == 1) padded.emplace_back();
  const Word h_rev = reverse(h);
  const Word h_inv = invert(h);
  const Word h_rev_inv = invert(h_rev);
  PalindromicFactorList out;
  for (std::size_t k = 0; k < padded.size(); ++k) {
    out.factors.push_back(k % 2 == 0 ? h * padded[k] * h_rev : h_rev_inv * padded[k] * h_inv);
  }
  out.target = h * list.target * h_inv;
  return out;
}

}  // namespace palw
