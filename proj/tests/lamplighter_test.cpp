#include <gtest/gtest.h>

#include "palw/demo.hpp"
#include "palw/errors.hpp"
#include "palw/lamplighter.hpp"
#include "support/generators.hpp"

namespace {

using palw::LampElement;
using palw::Word;

LampElement witness_target() { return palw::make_lamp_element({{0, 1}, {1, 2}}, 3); }

TEST(Lamplighter, WordEvaluation) {
  const auto e = palw::lamp_evaluate(palw::parse_word("a t a a t t", palw::lamplighter_alphabet()));
  EXPECT_EQ(e, witness_target());
  EXPECT_EQ(palw::lamp_evaluate(palw::parse_word("t a A a T", palw::lamplighter_alphabet())),
            palw::make_lamp_element({{1, 1}}, 0));
  EXPECT_EQ(palw::lamp_multiply(e, palw::lamp_invert(e)), LampElement{});
}

TEST(LamplighterProperty, EvaluationMatchesWalk) {
  gen::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = gen::random_word(rng, 2, static_cast<std::size_t>(gen::uniform(rng, 0, 25)));
    const auto walk = oracle::walk_integer_lamps(w, 1);
    const LampElement e = palw::lamp_evaluate(w);
    EXPECT_EQ(e.pos, walk.pos[0]);
    std::map<palw::Point, std::int64_t> lamps;
    for (const auto& [x, v] : e.lamps) lamps[{x}] = v;
    EXPECT_EQ(lamps, walk.lamps);
  }
}

TEST(LamplighterProperty, PalindromicElementsAreSymmetric) {
  gen::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const Word half = gen::random_word(rng, 2, static_cast<std::size_t>(gen::uniform(rng, 0, 8)));
    Word pal = half * palw::reverse(half);
    if (gen::uniform(rng, 0, 1)) pal = half * gen::random_word(rng, 2, 1) * palw::reverse(half);
    const LampElement e = palw::lamp_evaluate(pal);
    EXPECT_TRUE(palw::is_palindromic_element(e));
    for (const auto& [x, v] : e.lamps) EXPECT_EQ(e.at(e.pos - x), v);
    const Word rebuilt = palw::palindrome_for(e);
    EXPECT_TRUE(palw::is_palindrome(rebuilt));
    EXPECT_EQ(palw::lamp_evaluate(rebuilt), e);
  }
  EXPECT_THROW(palw::palindrome_for(witness_target()), palw::HypothesisError);
}

TEST(TwoPalDecision, WitnessHasNoDecompositionInTheScannedRange) {
  for (std::int64_t p = -25; p <= 28; ++p) {
    const auto v = palw::two_palindrome_decision(witness_target(), p);
    EXPECT_FALSE(v.decomposition.has_value()) << "p = " << p;
    EXPECT_FALSE(v.contradiction.empty());
  }
}

TEST(TwoPalDecisionProperty, AgreesWithDenseRationalElimination) {
  gen::Rng rng(53);
  int found = 0, none = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const LampElement f = gen::random_lamp_element(rng, 3, 3, 3);
    const std::int64_t p = gen::uniform(rng, -6, 6);
    const auto v = palw::two_palindrome_decision(f, p);
    EXPECT_EQ(v.decomposition.has_value(), oracle::two_pal_feasible_dense(f, p))
        << "p = " << p << " pos = " << f.pos;
    if (v.decomposition) {
      ++found;
      const auto& d = *v.decomposition;
      EXPECT_EQ(d.g.pos, p);
      EXPECT_TRUE(palw::is_palindromic_element(d.g));
      EXPECT_TRUE(palw::is_palindromic_element(d.h));
      EXPECT_EQ(palw::lamp_multiply(d.g, d.h), f);
    } else {
      ++none;
    }
  }
  // Both outcomes are exercised.
  EXPECT_GT(found, 0);
  EXPECT_GT(none, 0);
}

TEST(TwoPalDecisionProperty, ProductsOfTwoPalindromesAreFound) {
  gen::Rng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = gen::random_word(rng, 2, static_cast<std::size_t>(gen::uniform(rng, 0, 4)));
    const Word v = gen::random_word(rng, 2, static_cast<std::size_t>(gen::uniform(rng, 0, 4)));
    const Word a = u * palw::reverse(u), b = v * gen::random_word(rng, 2, 1) * palw::reverse(v);
    const LampElement target = palw::lamp_evaluate(a * b);
    const std::int64_t p = palw::lamp_evaluate(a).pos;
    EXPECT_TRUE(palw::two_palindrome_decision(target, p).decomposition.has_value());
  }
}

TEST(WidthThree, CertificateScansAndFactorsTheWitness) {
  const auto w = palw::certify_width_three(witness_target(), 25);
  EXPECT_TRUE(w.in_hypothesis);
  EXPECT_EQ(w.p_lo, -25);
  EXPECT_EQ(w.p_hi, 28);
  EXPECT_EQ(w.verdicts.size(), 54u);
  EXPECT_TRUE(w.all_none());
  std::size_t nonempty = 0;
  Word all;
  for (const Word& f : w.upper_factors) {
    EXPECT_TRUE(palw::is_palindrome(f));
    nonempty += f.empty() ? 0 : 1;
    all *= f;
  }
  EXPECT_LE(nonempty, 3u);
  EXPECT_EQ(palw::lamp_evaluate(all), witness_target());
}

TEST(BfsOracle, WitnessNeedsThreeWithinTheSearchBox) {
  const auto two = palw::minimal_palindromic_length_bfs(witness_target(), 9, 2);
  EXPECT_FALSE(two.minimum.has_value());
  EXPECT_FALSE(two.budget_exceeded);
  const auto three = palw::minimal_palindromic_length_bfs(witness_target(), 9, 3);
  ASSERT_TRUE(three.minimum.has_value());
  EXPECT_EQ(*three.minimum, 3u);
}

TEST(BfsOracle, SmallCounts) {
  EXPECT_EQ(palw::minimal_palindromic_length_bfs(LampElement{}, 5, 2).minimum, std::size_t{0});
  EXPECT_EQ(palw::minimal_palindromic_length_bfs(palw::make_lamp_element({{0, 1}}, 0), 5, 2).minimum,
            std::size_t{1});
  // a t: two palindromes, never one.
  EXPECT_EQ(palw::minimal_palindromic_length_bfs(palw::make_lamp_element({{0, 1}}, 1), 5, 2).minimum,
            std::size_t{2});
}

// Reference worked example: f on [-7, 7], its split into g (symmetric about
// 0) and h (symmetric about 1/2), and the two palindromic words.
TEST(WorkedExample, ReproducesTheReferenceTableAndWords) {
  const palw::WorkedExample ex = palw::run_worked_example();
  const std::vector<std::int64_t> f{0, 0, 0, 3, -1, 4, 0, 0, 1, 5, 0, 0, 0, 0, 2};
  const std::vector<std::int64_t> g{0, -2, -2, 1, 0, 4, -1, -2, -1, 4, 0, 1, -2, -2, 0};
  const std::vector<std::int64_t> h{0, 2, 2, 2, -1, 0, 1, 2, 2, 1, 0, -1, 2, 2, 2};
  EXPECT_EQ(ex.f, f);
  EXPECT_EQ(ex.g, g);
  EXPECT_EQ(ex.h, h);
  EXPECT_EQ(ex.w_g, "t^{-6}a^{-2}ta^{-2}tat^2a^4ta^{-1}ta^{-2}ta^{-1}ta^4t^2ata^{-2}ta^{-2}t^{-6}");
  EXPECT_EQ(ex.w_h, "t^{-6}a^2ta^2ta^2ta^{-1}t^2ata^2ta^2tat^2a^{-1}ta^2ta^2ta^2t^{-6}");
  EXPECT_TRUE(ex.w_g_evaluates);
  EXPECT_TRUE(ex.w_h_evaluates);
  EXPECT_TRUE(ex.product_evaluates);
  EXPECT_TRUE(ex.all_checks_pass());
  EXPECT_NE(palw::format_worked_example(ex).find("h(x)    0   2   2   2  -1"), std::string::npos);
}

}  // namespace
