#include "agbounds/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

namespace agc {
namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng, int zero_bias) {
  std::uniform_int_distribution<int> pick(0, f.order() - 1 + zero_bias);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const int v = pick(rng);
      m.at(r, c) = v >= f.order() ? f.zero() : f.element(v);
    }
  }
  return m;
}

class RandomMatrices : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(RandomMatrices, NullspaceAndRankAgree) {
  const Field f(GetParam());
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const Matrix m = random_matrix(f, rows, cols, rng, trial % 3 == 0 ? 2 * f.order() : 0);
    const RowReduction red = row_reduce(f, m);
    EXPECT_EQ(red.rank, rank_by_column_elimination(f, m));
    EXPECT_EQ(red.rank + red.nullspace.size(), cols);
    EXPECT_EQ(red.echelon.rows(), red.rank);
    for (const Vector& v : red.nullspace) {
      for (Element e : multiply(f, m, v)) EXPECT_EQ(e, f.zero());
    }
    if (!red.nullspace.empty()) {
      EXPECT_EQ(rank_by_column_elimination(f, Matrix::from_rows(red.nullspace, cols)), red.nullspace.size());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, RandomMatrices,
                         ::testing::Values(FieldSpec::gf4(), FieldSpec::gf8(), FieldSpec::gf9(), FieldSpec::gf16()),
                         [](const auto& info) {
                           const Field f(info.param);
                           return "GF" + std::to_string(f.order());
                         });

TEST(Matrix, IdentityHasFullRankAndNoKernel) {
  const Field f(FieldSpec::gf9());
  const auto red = row_reduce(f, Matrix::identity(f, 5));
  EXPECT_EQ(red.rank, 5u);
  EXPECT_TRUE(red.nullspace.empty());
  EXPECT_EQ(red.echelon, Matrix::identity(f, 5));
}

TEST(Matrix, EmptyMatrixHasWholeSpaceAsKernel) {
  const Field f(FieldSpec::gf4());
  const auto red = row_reduce(f, Matrix(0, 3));
  EXPECT_EQ(red.rank, 0u);
  EXPECT_EQ(red.nullspace.size(), 3u);
}

TEST(Matrix, AppendRowChecksLength) {
  Matrix m(0, 3);
  const Vector row(2);
  EXPECT_THROW(m.append_row(row), std::invalid_argument);
}

}  // namespace
}  // namespace agc
