#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace superalg;
using namespace testing_helpers;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Scalar(f, d(rng));
      if (f.is_quadratic()) m(i, j) = m(i, j) + Scalar(f, d(rng)) * Scalar::generator(f);
    }
  return m;
}

}  // namespace

TEST(Linalg, NullspaceAndRank) {
  Matrix m = Matrix::from_rows(QQ(), 3, {{q(1), q(2), q(3)}, {q(2), q(4), q(6)}});
  EXPECT_EQ(rank(m), 1u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
}

TEST(Linalg, RandomSystems) {
  for (const Field& f : {QQ(), Field::quadratic(-1), Field::prime(7)}) {
    std::mt19937 rng(7);
    for (int k = 0; k < 40; ++k) {
      Matrix m = random_matrix(f, 4, 6, rng);
      auto ns = nullspace(m);
      EXPECT_EQ(ns.size() + rank(m), 6u);
      for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
      Matrix sq = random_matrix(f, 4, 4, rng);
      if (auto inv = inverse(sq)) {
        EXPECT_TRUE((sq * *inv).is_identity());
        EXPECT_EQ(rank(sq), 4u);
      } else {
        EXPECT_LT(rank(sq), 4u);
      }
      Vec x = random_matrix(f, 6, 1, rng).column(0);
      auto sol = solve(m, m * x);
      ASSERT_TRUE(sol);
      EXPECT_EQ(m * *sol, m * x);
    }
  }
}

TEST(Linalg, InconsistentSystem) {
  Matrix m = Matrix::from_rows(QQ(), 2, {{q(1), q(1)}, {q(1), q(1)}});
  EXPECT_FALSE(solve(m, {q(1), q(2)}));
  EXPECT_FALSE(inverse(m));
}

TEST(Linalg, Realify) {
  Field k = Field::quadratic(-1);
  std::mt19937 rng(2);
  Matrix m = random_matrix(k, 3, 3, rng);
  Vec x = random_matrix(k, 3, 1, rng).column(0);
  EXPECT_EQ(realify(m, false) * realify(x), realify(m * x));
  EXPECT_EQ(realify(m, true) * realify(x), realify(m * conj(x)));
  EXPECT_EQ(complexify(k, realify(x)), x);
}

TEST(Linalg, IndependentSubset) {
  std::vector<Vec> vs{{q(1), q(0)}, {q(2), q(0)}, {q(0), q(1)}};
  auto idx = independent_subset(QQ(), vs);
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(normalize_leading({q(0), q(3), q(6)}), (Vec{q(0), q(1), q(2)}));
}
