#include <gtest/gtest.h>

#include "random_data.hpp"
#include "so4/catalog.hpp"
#include "so4/classify.hpp"
#include "so4/conjugacy.hpp"
#include "so4/errors.hpp"

using namespace so4;

namespace {

Element h1() { return Element::unit(H1); }
Element x1() { return Element::unit(X1); }
Element y1() { return Element::unit(Y1); }
Element h2() { return Element::unit(H2); }
Element x2() { return Element::unit(X2); }
Element y2() { return Element::unit(Y2); }

ClassLabel of(std::initializer_list<Element> gens) { return classify(Subalgebra::span_close(gens)); }
ClassLabel D(Family f) { return ClassLabel::discrete(f); }

}  // namespace

TEST(Classify, CatalogSelfClassification) {
  for (const auto& rep : enumerate_catalog()) {
    EXPECT_EQ(classify(rep.generators), rep.label) << render_label(rep.label);
  }
}

TEST(Classify, DimensionOne) {
  EXPECT_EQ(of({x1() + x2()}), D(Family::J5));
  EXPECT_EQ(of({Scalar(5) * x2()}), D(Family::J2));
  EXPECT_EQ(of({x1() + h2()}), D(Family::J6));
  // (2-2i)^2 / (1+i)^2 = -8i / 2i = -4.
  EXPECT_EQ(of({(Scalar(1) + Scalar::i()) * h1() + (Scalar(2) - Scalar(2) * Scalar::i()) * h2()}),
            ClassLabel::j8(-4));
  // a and -a give the same class.
  EXPECT_EQ(of({h1() + Scalar(2) * h2()}), of({h1() - Scalar(2) * h2()}));
  // h1 + x1 is semisimple with det -1, same as h1.
  EXPECT_EQ(of({h1() + x1() + Scalar(3) * h2()}), ClassLabel::j8(9));
  EXPECT_EQ(of({}), D(Family::Zero));
}

TEST(Classify, DimensionTwo) {
  EXPECT_EQ(of({x1(), x2()}), D(Family::K1_1));
  EXPECT_EQ(of({h1() + x1(), y2()}), D(Family::K1_3));
  EXPECT_EQ(of({x1() + x2(), h1() + h2()}), D(Family::K2_1));
  EXPECT_EQ(of({x1(), h1() + Scalar(2) * h2()}), ClassLabel::k2_2(4));
  EXPECT_EQ(of({x1(), h1()}), ClassLabel::k2_2(0));
  EXPECT_EQ(of({x1(), h1() + x2()}), D(Family::K2_3));
  EXPECT_EQ(of({x2(), h2() + Scalar::i() * h1()}), ClassLabel::k2_4(-1));
  EXPECT_EQ(of({x2(), h2() + y1()}), D(Family::K2_5));
  // Adding multiples of n to t does not change the class.
  EXPECT_EQ(of({x1(), h1() + x1() + Scalar(2) * h2()}), ClassLabel::k2_2(4));
}

TEST(Classify, DimensionThree) {
  EXPECT_EQ(of({x1(), x2(), h1() + h2()}), D(Family::L2_1));
  EXPECT_EQ(of({x1(), x2(), h1() - h2()}), D(Family::L4_1));
  // a = -3/16: r = 1/2, branch 1 is (3/2)h1 + (1/2)h2, branch 2 swaps.
  EXPECT_EQ(of({x1(), x2(), Scalar(3) * h1() + h2()}), ClassLabel::l3(Scalar::fraction(-3, 16), 1));
  EXPECT_EQ(of({x1(), x2(), h1() + Scalar(3) * h2()}), ClassLabel::l3(Scalar::fraction(-3, 16), 2));
  EXPECT_EQ(of({h1(), x2(), h2()}), D(Family::L3_0_1));
  EXPECT_EQ(of({x1(), x2(), h2()}), D(Family::L3_0_2));
  EXPECT_EQ(of({x1(), h1(), h2()}), D(Family::L3_0_3));
  EXPECT_EQ(of({x1(), h1(), x2()}), D(Family::L3_0_4));
  EXPECT_EQ(of({h1(), x1(), y1()}), D(Family::A1_1));
  EXPECT_EQ(of({h2(), x2(), y2()}), D(Family::A1_2));
  EXPECT_EQ(of({h1() + h2(), x1() + x2(), y1() + y2()}), D(Family::A1_3));
  // Twisted diagonal: x1 paired with y2 is still A1^3.
  EXPECT_EQ(of({h1() - h2(), x1() + y2(), y1() + x2()}), D(Family::A1_3));
}

TEST(Classify, DimensionFourAndUp) {
  EXPECT_EQ(of({h1(), x1(), h2(), x2()}), D(Family::M8_1));
  EXPECT_EQ(of({h1(), x1(), y1(), h2()}), D(Family::A1J_1));
  EXPECT_EQ(of({h1(), x1(), y1(), x2() + y2()}), D(Family::A1J_1));
  EXPECT_EQ(of({h1(), x1(), y1(), y2()}), D(Family::A1J_2));
  EXPECT_EQ(of({h2(), x2(), y2(), h1()}), D(Family::A1J_3));
  EXPECT_EQ(of({h2(), x2(), y2(), x1()}), D(Family::A1J_4));
  EXPECT_EQ(of({h1(), x1(), y1(), h2(), y2()}), D(Family::A1K2_1));
  EXPECT_EQ(of({h2(), x2(), y2(), h1(), x1()}), D(Family::A1K2_2));
  EXPECT_EQ(classify(Subalgebra::full()), D(Family::Full));
}

TEST(Classify, SubclassifiersRejectWrongDimension) {
  EXPECT_THROW(classify_dim1(Subalgebra::span_close({x1(), x2()})), InvalidArgument);
  EXPECT_THROW(classify_dim2(Subalgebra::span_close({x1()})), InvalidArgument);
  EXPECT_THROW(classify_dim3(Subalgebra::span_close({x1()})), InvalidArgument);
  EXPECT_THROW(classify_dim4plus(Subalgebra::span_close({x1()})), InvalidArgument);
}

TEST(Classify, StructuralProfileInvariantUnderConjugation) {
  for (const auto& rep : enumerate_catalog()) {
    const auto s = Subalgebra::span_close(rep.generators);
    const auto p = structural_profile(s);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      EXPECT_EQ(structural_profile(apply(random_inner(seed, 2), s)), p) << render_label(rep.label);
    }
  }
}

// L3 branches at equal a are separated and each is stable under conjugation.
TEST(Classify, L3BranchesSeparated) {
  for (const Scalar& a : {Scalar(2), Scalar::fraction(-1, 2), Scalar::fraction(-3, 16)}) {
    const auto b1 = Subalgebra::span_close(representative_of(ClassLabel::l3(a, 1)).generators);
    const auto b2 = Subalgebra::span_close(representative_of(ClassLabel::l3(a, 2)).generators);
    EXPECT_NE(classify(b1), classify(b2));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      EXPECT_EQ(classify(apply(random_inner(seed, 3), b1)), ClassLabel::l3(a, 1));
      EXPECT_EQ(classify(apply(random_inner(seed, 3), b2)), ClassLabel::l3(a, 2));
    }
  }
}

// Tori outside the sample set: ad t on <x1, x2> with arbitrary eigenvalues.
TEST(Classify, RandomToriAgreeWithIntrinsicType) {
  std::mt19937_64 rng(51);
  for (int n = 0; n < 300; ++n) {
    Scalar p = so4::testing::random_nonzero(rng), q = so4::testing::random_nonzero(rng);
    const auto s = Subalgebra::span_close({x1(), x2(), p * h1() + q * h2()});
    const ClassLabel label = classify(s);
    ASSERT_EQ(implied_abstract_type(label), abstract_type_of(s)) << render_label(label);
  }
}
