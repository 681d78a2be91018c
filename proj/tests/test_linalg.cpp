#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace wsat;

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  // product of rows×k and k×cols integer matrices, so rank <= k
  const int k = 1 + static_cast<int>(rng() % rank_cap);
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix<Rational> a(rows, std::vector<Rational>(k)), b(k, std::vector<Rational>(cols)), out(rows, std::vector<Rational>(cols, 0));
  for (auto& row : a)
    for (auto& x : row) x = dist(rng);
  for (auto& row : b)
    for (auto& x : row) x = dist(rng);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

Matrix<Fp61> to_fp(const Matrix<Rational>& m) {
  Matrix<Fp61> out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(to_fp61(x));
  }
  return out;
}

}  // namespace

TEST(Rank, Trivial) {
  EXPECT_EQ(rank_of(Matrix<Rational>(3, std::vector<Rational>(4, 0))), 0u);
  for (int k = 1; k <= 6; ++k) {
    Matrix<Rational> id(k, std::vector<Rational>(k, 0));
    for (int i = 0; i < k; ++i) id[i][i] = 1;
    EXPECT_EQ(rank_of(id), static_cast<std::size_t>(k));
    EXPECT_EQ(rank_of(to_fp(id)), static_cast<std::size_t>(k));
  }
  EXPECT_EQ(rank_of(Matrix<Rational>{}), 0u);
}

TEST(Rank, MatchesOracleOnBothBackends) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    auto m = random_matrix(rng, rows, cols, 6);
    // fractional scaling of rows must not change anything
    for (std::size_t i = 0; i < rows; ++i)
      if (rng() % 2)
        for (auto& x : m[i]) x /= static_cast<long>(1 + rng() % 7);
    const std::size_t expect = oracle::rank(m);
    EXPECT_EQ(rank_of(m), expect);
    EXPECT_EQ(rank_of(to_fp(m)), expect);
  }
}

TEST(RowSpace, InsertAndContains) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 7, 6, 5);
    RowSpace<Rational> rs(6);
    RowSpace<Fp61> rf(6);
    for (const auto& row : m) {
      rs.insert(row);
      rf.insert(to_fp(Matrix<Rational>{row})[0]);
    }
    EXPECT_EQ(rs.dim(), oracle::rank(m));
    EXPECT_EQ(rf.dim(), rs.dim());
    // a combination of rows lies in the span; a random vector usually does not
    std::vector<Rational> comb(6, 0), probe(6);
    for (const auto& row : m) {
      const long c = static_cast<long>(rng() % 5) - 2;
      for (int j = 0; j < 6; ++j) comb[j] += c * row[j];
    }
    EXPECT_TRUE(rs.contains(comb));
    for (auto& x : probe) x = static_cast<long>(rng() % 11) - 5;
    auto aug = m;
    aug.push_back(probe);
    EXPECT_EQ(rs.contains(probe), oracle::rank(aug) == rs.dim());
    EXPECT_EQ(rf.contains(to_fp(Matrix<Rational>{probe})[0]), rs.contains(probe));
  }
}

TEST(Fp61Field, Arithmetic) {
  const Fp61 a = 123456789, b = -5;
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(Fp61(-1).to_string(), "-1");
  EXPECT_EQ(to_fp61(Rational(1, 3)) * Fp61(3), Fp61(1));
  EXPECT_EQ(to_fp61(Rational(-7, 2)) * Fp61(2), Fp61(-7));
  EXPECT_THROW(Fp61(0).inverse(), std::domain_error);
}
