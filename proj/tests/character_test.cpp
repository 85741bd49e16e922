#include <gtest/gtest.h>

#include "atiyah/character.hpp"
#include "atiyah/format.hpp"
#include "support/random_bundles.hpp"

namespace {

using atiyah::BivariateCharacter;
using atiyah::BundleSum;
using atiyah::IndecomposableBundle;
using atiyah::TorsionContext;

const TorsionContext kFree{0};

BivariateCharacter poly(TorsionContext ctx,
                        std::initializer_list<std::tuple<std::int64_t, std::int64_t, int>> terms) {
  BivariateCharacter c(ctx);
  for (const auto& [t, q, k] : terms) c.add(t, q, k);
  return c;
}

TEST(Bracket, Examples) {
  EXPECT_EQ(atiyah::bracket(1), poly(kFree, {{0, 0, 1}}));
  EXPECT_EQ(atiyah::bracket(2), poly(kFree, {{0, 1, 1}, {0, -1, 1}}));
  EXPECT_EQ(atiyah::bracket(4), poly(kFree, {{0, 3, 1}, {0, 1, 1}, {0, -1, 1}, {0, -3, 1}}));
  EXPECT_THROW(atiyah::bracket(0), std::invalid_argument);
}

TEST(Character, Examples) {
  EXPECT_EQ(atiyah::character(BundleSum::trivial(kFree)), poly(kFree, {{0, 0, 1}}));
  EXPECT_EQ(atiyah::character(IndecomposableBundle(kFree, 1, 2)),
            poly(kFree, {{1, 1, 1}, {1, -1, 1}}));
  BundleSum two_f2(kFree);
  two_f2.add(IndecomposableBundle::atiyah(kFree, 2), 2);
  EXPECT_EQ(atiyah::character(two_f2), poly(kFree, {{0, 1, 2}, {0, -1, 2}}));
}

TEST(Character, TorsionReducesLineExponent) {
  const TorsionContext c3(3);
  const auto c = BivariateCharacter::monomial(c3, 2, 0) * BivariateCharacter::monomial(c3, 2, 0);
  EXPECT_EQ(c, BivariateCharacter::monomial(c3, 1, 0));
}

TEST(DecomposeCharacter, Examples) {
  const auto sq = poly(kFree, {{0, 2, 1}, {0, 0, 2}, {0, -2, 1}});
  EXPECT_EQ(atiyah::to_string(atiyah::decompose_character(sq)), "O + F_3");

  const auto cube = atiyah::bracket(2) * atiyah::bracket(2) * atiyah::bracket(2);
  EXPECT_EQ(cube, poly(kFree, {{0, 3, 1}, {0, 1, 3}, {0, -1, 3}, {0, -3, 1}}));
  EXPECT_EQ(atiyah::to_string(atiyah::decompose_character(cube)), "2 F_2 + F_4");
}

TEST(DecomposeCharacter, RejectsNonCharacters) {
  EXPECT_THROW(atiyah::decompose_character(poly(kFree, {{0, 1, 1}})), atiyah::not_a_character);
  EXPECT_THROW(atiyah::decompose_character(poly(kFree, {{0, -2, 1}})), atiyah::not_a_character);
  EXPECT_THROW(atiyah::decompose_character(poly(kFree, {{0, 0, -1}})), atiyah::not_a_character);
  // [3] - [1] has a hole in the middle weight
  EXPECT_THROW(atiyah::decompose_character(poly(kFree, {{0, 2, 1}, {0, -2, 1}})),
               atiyah::not_a_character);
}

TEST(DecomposeCharacter, ZeroIsEmptySum) {
  EXPECT_TRUE(atiyah::decompose_character(BivariateCharacter(kFree)).empty());
}

TEST(OracleCheck, Examples) {
  const auto f = [](std::int64_t r) { return IndecomposableBundle::atiyah(kFree, r); };
  const auto a = atiyah::oracle_check(f(2), f(2));
  EXPECT_TRUE(a.agree);
  EXPECT_EQ(atiyah::to_string(a.oracle), "O + F_3");

  const auto b = atiyah::oracle_check(f(3), f(3));
  EXPECT_TRUE(b.agree);
  EXPECT_EQ(atiyah::to_string(b.formula), "O + F_3 + F_5");

  gen::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto ctx = gen::context(rng);
    EXPECT_TRUE(atiyah::oracle_check(IndecomposableBundle::trivial(ctx),
                                     gen::indecomposable(rng, ctx, 9))
                    .agree);
  }
}

TEST(OracleCheck, MismatchedContextsThrow) {
  EXPECT_THROW(atiyah::oracle_check(IndecomposableBundle::atiyah(kFree, 2),
                                    IndecomposableBundle::atiyah(TorsionContext(2), 2)),
               atiyah::context_mismatch);
}

TEST(Properties, CharacterIsRingHomomorphism) {
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto ctx = gen::context(rng);
    const auto x = gen::bundle(rng, ctx);
    const auto y = gen::bundle(rng, ctx);
    EXPECT_EQ(atiyah::character(atiyah::tensor(x, y)),
              atiyah::character(x) * atiyah::character(y));
    EXPECT_EQ(atiyah::character(x + y), atiyah::character(x) + atiyah::character(y));
  }
}

TEST(Properties, RoundTripSymmetryAndRank) {
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto ctx = gen::context(rng);
    const auto x = gen::bundle(rng, ctx, 5, 9);
    const auto c = atiyah::character(x);
    EXPECT_TRUE(c.is_weight_symmetric());
    EXPECT_EQ(c.dimension(), atiyah::rank(x));
    EXPECT_EQ(atiyah::decompose_character(c), x);
  }
}

TEST(Properties, PeelOrderDoesNotMatter) {
  gen::Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto ctx = gen::context(rng);
    const auto c = atiyah::character(gen::bundle(rng, ctx, 6, 7)) *
                   atiyah::character(gen::bundle(rng, ctx, 2, 4));
    EXPECT_EQ(atiyah::decompose_character(c, atiyah::PeelOrder::ascending),
              atiyah::decompose_character(c, atiyah::PeelOrder::descending));
  }
}

TEST(Properties, F4PowersHaveOddIndicesAndSimpleTop) {
  const auto f4 = atiyah::character(IndecomposableBundle::atiyah(kFree, 4));
  auto c = f4;
  for (std::int64_t n = 2; n <= 6; ++n) {
    c = c * f4;
    const auto d = atiyah::decompose_character(c);
    const std::int64_t top = 3 * n + 1;
    EXPECT_EQ(d.multiplicity(IndecomposableBundle::atiyah(kFree, top)), 1);
    for (const auto& [b, m] : d.terms()) EXPECT_EQ((top - b.index()) % 2, 0) << n;
    EXPECT_EQ(d, atiyah::tensor_power(BundleSum(IndecomposableBundle::atiyah(kFree, 4)), n));
  }
}

}  // namespace
