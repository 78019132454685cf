// Documented per-operation examples not already covered elsewhere.
#include <gtest/gtest.h>

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

Subalgebra span(std::initializer_list<Element> g) { return Subalgebra::span_close(g); }

std::size_t bits(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t height(const InnerAutomorphism& phi) {
  std::size_t h = 0;
  for (const Mat2* m : {&phi.first(), &phi.second()})
    for (const Scalar* s : {&m->a, &m->b, &m->c, &m->d}) h = std::max({h, bits(s->re()), bits(s->im())});
  return h;
}

}  // namespace

TEST(Examples, ScalarArithmetic) {
  const Scalar half = Scalar::fraction(1, 2);
  EXPECT_EQ((half + Scalar::i()) * (half - Scalar::i()), Scalar::fraction(5, 4));
  EXPECT_EQ(Scalar::fraction(3, 4) / Scalar::fraction(-3, 2), Scalar::fraction(-1, 2));
  EXPECT_EQ(parse_scalar("3/2-1/2i"), Scalar(Rational(3, 2), Rational(-1, 2)));
}

TEST(Examples, BracketAndMatrixForm) {
  EXPECT_EQ(bracket(x1() + x2(), y1() + y2()), h1() + h2());
  Matrix mh = matrix_form(h1());
  EXPECT_EQ(mh(0, 0), Scalar(1));
  EXPECT_EQ(mh(1, 1), Scalar(-1));
  Matrix mx = matrix_form(x2());
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(mx(r, c), Scalar(r == 2 && c == 3 ? 1 : 0));
  EXPECT_EQ(matrix_form(Element()), Matrix(4, 4));
}

TEST(Examples, SpanClose) {
  EXPECT_EQ(span({x1(), h1() + Scalar(5) * h2()}).dim(), 2);
  EXPECT_THROW(span({x1(), y1()}), NotClosed);
}

TEST(Examples, DerivedSeries) {
  EXPECT_EQ(span({h1(), x1(), y1()}).derived_dims(), (std::vector<int>{3}));
  EXPECT_EQ(span({h1(), h2()}).derived_dims(), (std::vector<int>{2, 0}));
  const auto series = derived_series(span({h1(), h2(), x1(), x2()}));
  ASSERT_EQ(series.terms.size(), 3u);
  EXPECT_EQ(series.terms[1], span({x1(), x2()}));
}

TEST(Examples, KillingForm) {
  EXPECT_EQ(killing_form(span({h1(), h2()})), Matrix(2, 2));
  EXPECT_EQ(determinant(killing_form(span({h1(), h2(), x1(), x2()}))), Scalar());
}

TEST(Examples, RadicalAndLevi) {
  EXPECT_EQ(radical(span({x1(), y1(), h1(), h2()})), span({h2()}));
  EXPECT_EQ(radical(span({h1() + h2(), x1() + x2(), y1() + y2()})).dim(), 0);
  EXPECT_EQ(levi_factor(span({x1(), y1(), h1(), x2(), h2()})), span({x1(), y1(), h1()}));
  EXPECT_EQ(levi_factor(span({x2(), y2(), h2(), x1()})), span({x2(), y2(), h2()}));
}

TEST(Examples, ProjectionsAndIntersections) {
  EXPECT_EQ(factor_projection(span({h1(), x1(), y1()}), Factor::Second).dim(), 0);
  EXPECT_EQ(factor_projection(span({h1() + h2(), x1() + x2(), y1() + y2()}), Factor::First), span({h1(), x1(), y1()}));
  EXPECT_EQ(factor_projection(span({x1(), h1() + Scalar(3) * h2()}), Factor::Second), span({h2()}));
  EXPECT_EQ(factor_intersection(span({x1(), y1(), h1(), x2()}), Factor::Second), span({x2()}));
  EXPECT_EQ(factor_intersection(span({x1() + x2()}), Factor::First).dim(), 0);
  EXPECT_EQ(factor_intersection(span({x1(), x2(), h1() + h2()}), Factor::First), span({x1()}));
}

TEST(Examples, CatalogCounts) {
  std::map<std::pair<int, bool>, int> count;
  for (const auto& rep : enumerate_catalog()) {
    const Family f = rep.label.family();
    ++count[{family_dim(f), family_is_solvable(f)}];
  }
  EXPECT_EQ((count[{3, false}]), 3);
  EXPECT_EQ((count[{4, false}]), 4);
  EXPECT_EQ((count[{5, false}]), 2);
  EXPECT_EQ(representative_of(ClassLabel::discrete(Family::A1K2_2)).generators,
            (std::vector<Element>{x2(), y2(), h2(), x1(), h1()}));
}

TEST(Examples, Equivalence) {
  const Scalar a = Scalar::fraction(-3, 16);
  EXPECT_FALSE(equivalent(Subalgebra::span_close(representative_of(ClassLabel::l3(a, 1)).generators),
                          Subalgebra::span_close(representative_of(ClassLabel::l3(a, 2)).generators)));
  const auto s = span({x1(), x2(), h1() + h2()});
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_TRUE(equivalent(s, apply(random_inner(seed, 2), s)));
  EXPECT_EQ(apply(InnerAutomorphism(), x1() + y2()), x1() + y2());
}

// Sanity metric, not a bound: mean coefficient height grows with complexity.
TEST(Examples, ComplexityRaisesHeight) {
  double mean[4] = {0, 0, 0, 0};
  for (int c = 1; c <= 3; ++c) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) mean[c] += static_cast<double>(height(random_inner(seed, c)));
  }
  EXPECT_LT(mean[1], mean[2]);
  EXPECT_LT(mean[2], mean[3]);
}
