#include <gtest/gtest.h>

#include "random_data.hpp"
#include "so4/linalg.hpp"

using namespace so4;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = so4::testing::random_scalar(rng, 5);
  return m;
}

}  // namespace

TEST(Linalg, RrefOfKnownMatrix) {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  Echelon e = rref(m);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced, Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}, 3));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Linalg, DeterminantMultiplicative) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 200; ++n) {
    Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    ASSERT_EQ(determinant(a * b), determinant(a) * determinant(b));
    ASSERT_EQ(determinant(a.transpose()), determinant(a));
  }
  EXPECT_EQ(determinant(Matrix::identity(5)), Scalar(1));
}

TEST(Linalg, NullspaceIsKernel) {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 200; ++n) {
    Matrix a = random_matrix(rng, 3, 6);
    auto basis = nullspace(a);
    ASSERT_EQ(basis.size() + rank(a), 6u);
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < 3; ++i) {
        Scalar dot;
        for (std::size_t j = 0; j < 6; ++j) dot += a(i, j) * v[j];
        ASSERT_TRUE(dot.is_zero());
      }
    }
  }
}

TEST(Linalg, SpanBasisDropsDependents) {
  std::vector<Vector> vs = {{1, 0, 1}, {2, 0, 2}, {0, 1, 0}};
  auto basis = span_basis(vs, 3);
  EXPECT_EQ(basis.size(), 2u);
}
