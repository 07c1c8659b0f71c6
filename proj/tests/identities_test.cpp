#include <gtest/gtest.h>

#include "palw/errors.hpp"
#include "palw/identities.hpp"
#include "support/generators.hpp"

namespace {

using palw::PalindromicFactorList;
using palw::Word;

Word commutator(const Word& g, const Word& b) {
  return g * b * palw::invert(g) * palw::invert(b);
}

PalindromicFactorList random_palindromic_list(gen::Rng& rng, std::uint32_t gens) {
  PalindromicFactorList list;
  const auto n = gen::uniform(rng, 0, 4);
  for (std::int64_t k = 0; k < n; ++k) {
    const Word half = gen::random_word(rng, gens, static_cast<std::size_t>(gen::uniform(rng, 0, 4)));
    Word p = half * palw::reverse(half);
    if (gen::uniform(rng, 0, 1)) p = half * gen::random_word(rng, gens, 1) * palw::reverse(half);
    list.factors.push_back(p);
    list.target *= p;
  }
  return list;
}

TEST(Commutator, ThreePalindromes) {
  const palw::Alphabet a({"x", "y"});
  const Word g = palw::parse_word("x y", a), b = palw::parse_word("y", a);
  const auto list = palw::commutator_three_palindromes(g, b);
  ASSERT_EQ(list.factors.size(), 3u);
  for (const Word& w : list.factors) EXPECT_TRUE(palw::is_palindrome(w));
  EXPECT_TRUE(oracle::freely_equal(list.factors[0] * list.factors[1] * list.factors[2],
                                   commutator(g, b)));
  EXPECT_THROW(palw::commutator_three_palindromes(g, g), palw::HypothesisError);
}

TEST(CommutatorProperty, RandomPairs) {
  gen::Rng rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    const Word g = gen::random_word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 10)));
    const Word b = gen::random_word(rng, 3, 1);
    const auto list = palw::commutator_three_palindromes(g, b);
    EXPECT_TRUE(palw::factor_list_valid(list));
    EXPECT_LE(list.count(), 3u);
    Word all;
    for (const Word& w : list.factors) {
      EXPECT_TRUE(palw::is_palindrome(w));
      all *= w;
    }
    EXPECT_TRUE(oracle::freely_equal(all, commutator(g, b)));
  }
}

TEST(ConjugateProperty, CountGrowsByAtMostOne) {
  gen::Rng rng(82);
  for (int trial = 0; trial < 300; ++trial) {
    const PalindromicFactorList in = random_palindromic_list(rng, 3);
    const Word h = gen::random_word(rng, 3, static_cast<std::size_t>(gen::uniform(rng, 0, 8)));
    const auto out = palw::conjugate_factorization(h, in);
    EXPECT_TRUE(palw::factor_list_valid(out));
    EXPECT_LE(out.count(), in.count() + 1);
    Word all;
    for (const Word& w : out.factors) {
      EXPECT_TRUE(palw::is_palindrome(w));
      all *= w;
    }
    EXPECT_TRUE(oracle::freely_equal(all, h * in.target * palw::invert(h)));
  }
}

TEST(FactorList, ValidityChecksPalindromesAndProduct) {
  const palw::Alphabet a({"x", "y"});
  PalindromicFactorList list{{palw::parse_word("x y x", a)}, palw::parse_word("x y x", a)};
  EXPECT_TRUE(palw::factor_list_valid(list));
  list.target = palw::parse_word("x y", a);
  EXPECT_FALSE(palw::factor_list_valid(list));
  list.factors = {palw::parse_word("x y", a)};
  EXPECT_FALSE(palw::factor_list_valid(list));
}

}  // namespace
