#include <gtest/gtest.h>

#include "random_data.hpp"
#include "so4/errors.hpp"
#include "so4/scalar.hpp"

using namespace so4;
using so4::testing::random_nonzero;
using so4::testing::random_scalar;

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 2000; ++n) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + Scalar(), a);
    ASSERT_EQ(a * Scalar(1), a);
    ASSERT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Scalar(1));
      ASSERT_EQ(b / a * a, b);
    }
  }
}

TEST(Scalar, ConjugateAndNorm) {
  std::mt19937_64 rng(12);
  for (int n = 0; n < 1000; ++n) {
    Scalar a = random_scalar(rng);
    ASSERT_EQ(a * a.conj(), Scalar(a.norm()));
    ASSERT_EQ(a.conj().conj(), a);
  }
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
  EXPECT_THROW(Scalar::fraction(1, 0), DivisionByZero);
}

TEST(Scalar, RenderCanonical) {
  EXPECT_EQ(render_scalar(Scalar()), "0");
  EXPECT_EQ(render_scalar(Scalar::i()), "i");
  EXPECT_EQ(render_scalar(-Scalar::i()), "-i");
  EXPECT_EQ(render_scalar(Scalar::fraction(3, 2) - Scalar::fraction(1, 2) * Scalar::i()), "3/2-1/2i");
  EXPECT_EQ(render_scalar(Scalar::fraction(1, 2) * Scalar::i()), "1/2i");
  EXPECT_EQ(render_scalar(Scalar::fraction(-6, 4)), "-3/2");
  EXPECT_EQ(render_scalar(Scalar(1) + Scalar::i()), "1+i");
}

TEST(Scalar, ParseForms) {
  EXPECT_EQ(parse_scalar("0"), Scalar());
  EXPECT_EQ(parse_scalar(" -3/16 "), Scalar::fraction(-3, 16));
  EXPECT_EQ(parse_scalar("i"), Scalar::i());
  EXPECT_EQ(parse_scalar("-i"), -Scalar::i());
  EXPECT_EQ(parse_scalar("2-2i"), Scalar(2) - Scalar(2) * Scalar::i());
  EXPECT_EQ(parse_scalar("+1/2i"), Scalar::fraction(1, 2) * Scalar::i());
  EXPECT_EQ(parse_scalar("4/6"), Scalar::fraction(2, 3));
  EXPECT_EQ(parse_scalar("1 + i"), Scalar(1) + Scalar::i());
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/", "/2", "1//2", "1+", "ii", "1.5", "2i3", "--1"}) {
    EXPECT_THROW(parse_scalar(bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_scalar("1/0"), DivisionByZero);
}

TEST(Scalar, RenderParseRoundTripRandomized) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 2000; ++n) {
    Scalar a = random_scalar(rng, 1000);
    ASSERT_EQ(parse_scalar(render_scalar(a)), a) << render_scalar(a);
  }
}

TEST(Scalar, ExactSqrtIsPrincipal) {
  std::mt19937_64 rng(14);
  for (int n = 0; n < 1000; ++n) {
    Scalar r = random_nonzero(rng);
    auto root = exact_sqrt(r * r);
    ASSERT_TRUE(root.has_value());
    ASSERT_EQ(*root * *root, r * r);
    ASSERT_TRUE(in_principal_half_plane(*root));
    ASSERT_TRUE(*root == r || *root == -r);
  }
  EXPECT_EQ(*exact_sqrt(Scalar(-1)), Scalar::i());
  EXPECT_EQ(*exact_sqrt(Scalar(2) * Scalar::i()), Scalar(1) + Scalar::i());
  EXPECT_EQ(*exact_sqrt(Scalar::fraction(1, 4)), Scalar::fraction(1, 2));
  EXPECT_EQ(*exact_sqrt(Scalar()), Scalar());
  EXPECT_FALSE(exact_sqrt(Scalar(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Scalar::i()).has_value());
  EXPECT_FALSE(exact_sqrt(Scalar(1) + Scalar(2) * Scalar::i()).has_value());
}

TEST(Scalar, PrincipalHalfPlane) {
  EXPECT_TRUE(in_principal_half_plane(Scalar(1)));
  EXPECT_TRUE(in_principal_half_plane(Scalar::i()));
  EXPECT_TRUE(in_principal_half_plane(Scalar(-5) + Scalar::i()));
  EXPECT_FALSE(in_principal_half_plane(Scalar(-1)));
  EXPECT_FALSE(in_principal_half_plane(-Scalar::i()));
  EXPECT_FALSE(in_principal_half_plane(Scalar()));
}
