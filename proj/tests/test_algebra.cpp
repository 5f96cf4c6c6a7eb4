#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace superalg;
using namespace testing_helpers;

namespace {

std::vector<Scalar> dense(const SuperAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Scalar> c(n * n * n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) c[(i * n + j) * n + t.index] = t.coeff;
  return c;
}

// Upper triangular 2x2 with E12 odd: basis E11, E22, E12.
SuperAlgebra upper_triangular(const Field& f) {
  std::vector<Scalar> c(27, Scalar::zero(f));
  auto set = [&](int i, int j, int k) { c[(i * 3 + j) * 3 + k] = Scalar::one(f); };
  set(0, 0, 0);
  set(1, 1, 1);
  set(0, 2, 2);
  set(2, 1, 2);
  return SuperAlgebra::from_dense(f, {0, 0, 1}, c, {Scalar::one(f), Scalar::one(f), Scalar::zero(f)});
}

// Q x Q, or a direct sum of two copies of b.
SuperAlgebra direct_sum(const SuperAlgebra& b) {
  std::size_t n = b.dim();
  std::vector<Scalar> c(8 * n * n * n, Scalar::zero(b.field()));
  auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * 2 * n + j) * 2 * n + k; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : b.product(i, j)) {
        c[idx(i, j, t.index)] = t.coeff;
        c[idx(n + i, n + j, n + t.index)] = t.coeff;
      }
  std::vector<int> par(b.parities());
  par.insert(par.end(), b.parities().begin(), b.parities().end());
  Vec unit = b.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return SuperAlgebra::from_dense(b.field(), par, c, unit);
}

// Graded simplicity by brute force: every nonzero homogeneous x must generate
// the whole algebra as a two-sided ideal.
bool brute_graded_simple(const SuperAlgebra& a) {
  const Field& f = a.field();
  long p = f.p();
  for (int par = 0; par < 2; ++par) {
    auto idx = a.indices_of_parity(par);
    std::size_t total = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 1; code < total; ++code) {
      Vec x = zero_vec(f, a.dim());
      std::size_t c = code;
      for (auto i : idx) {
        x[i] = Scalar(f, static_cast<long>(c % p));
        c /= p;
      }
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
          gens.push_back(a.mul(a.mul(unit_vec(f, a.dim(), i), x), unit_vec(f, a.dim(), j)));
      if (rank(Matrix::from_columns(f, a.dim(), gens)) < a.dim()) return false;
    }
  }
  return true;
}

bool spans_same(const Field& f, std::size_t n, const std::vector<Element>& got, const std::vector<Vec>& want) {
  std::vector<Vec> g;
  for (const auto& e : got) g.push_back(e.coords());
  if (g.size() != want.size()) return false;
  auto all = g;
  all.insert(all.end(), want.begin(), want.end());
  return rank(Matrix::from_columns(f, n, all)) == want.size();
}

}  // namespace

TEST(Multiply, Examples) {
  SuperAlgebra a = quadratic_graded(q(2));
  Element u = a.basis(1);
  EXPECT_EQ(a.one() * u, u);
  EXPECT_EQ(u * u, a.scalar(q(2)));
  SuperAlgebra h = graded_quaternion(q(-1), q(-1));
  EXPECT_EQ(h.basis(3) * h.basis(3), h.scalar(q(-1)));
  EXPECT_THROW(multiply(u, h.basis(1)), Error);
}

TEST(Invert, Examples) {
  SuperAlgebra a = quadratic_graded(q(2));
  EXPECT_EQ(*invert_homogeneous(a.one()), a.one());
  EXPECT_EQ(*invert_homogeneous(a.basis(1)), q(1, 2) * a.basis(1));
  SuperAlgebra m = matrix_superalgebra(1, 1, QQ());
  EXPECT_FALSE(invert_homogeneous(m.basis(0)));
  EXPECT_THROW(invert_homogeneous(a.one() + a.basis(1)), Error);
}

TEST(Center, Examples) {
  SuperAlgebra m11 = matrix_superalgebra(1, 1, QQ());
  EXPECT_TRUE(spans_same(QQ(), 4, graded_center(m11), {m11.unit()}));
  SuperAlgebra qa = quadratic_graded(q(3));
  EXPECT_TRUE(spans_same(QQ(), 2, graded_center(qa), {qa.unit()}));
  SuperAlgebra comm = trivially_graded(quadratic_graded(q(3)));
  EXPECT_EQ(graded_center(comm).size(), 2u);
  EXPECT_EQ(center(qa).size(), 2u);

  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    SuperAlgebra a = matrix_superalgebra(n, m, QQ());
    EXPECT_EQ(center(a).size(), 1u);
    Vec d = zero_vec(QQ(), a.dim());
    int N = n + m;
    for (int i = 0; i < N; ++i) d[static_cast<std::size_t>(i * N + i)] = q(i < n ? 1 : -1);
    EXPECT_TRUE(spans_same(QQ(), a.dim(), center_even(a), {a.unit(), d}));
  }
  SuperAlgebra h = graded_quaternion(q(-1), q(-1));
  EXPECT_TRUE(spans_same(QQ(), 4, center_even(h), {h.unit(), unit_vec(QQ(), 4, 3)}));
}

TEST(Center, GradedCenterSupercommutes) {
  for (auto a : {matrix_superalgebra(2, 1, QQ()), quadratic_graded(q(5)), graded_quaternion(q(2), q(3)),
                 graded_tensor(trivially_graded(matrix_superalgebra(2, 0, QQ())), quadratic_graded(q(5)))}) {
    for (const auto& z : graded_center(a)) {
      int pz = z.parity();
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Element e = a.basis(i);
        Scalar sign = q((pz * e.parity()) % 2 ? -1 : 1);
        EXPECT_EQ(z * e, sign * (e * z));
      }
    }
  }
}

TEST(Simple, Examples) {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 0}}) {
    SuperAlgebra a = matrix_superalgebra(n, m, QQ());
    EXPECT_TRUE(is_graded_simple(a));
    EXPECT_TRUE(is_central(a));
  }
  SuperAlgebra one = quadratic_graded(q(1));
  EXPECT_TRUE(is_graded_simple(one));
  EXPECT_FALSE(is_graded_simple(trivially_graded(one)));
  EXPECT_FALSE(is_graded_simple(direct_sum(trivially_graded(matrix_superalgebra(2, 0, QQ())))));
  EXPECT_FALSE(is_semisimple(upper_triangular(QQ())));
  EXPECT_FALSE(is_graded_simple(upper_triangular(QQ())));
}

TEST(Simple, BruteForceOracleOverPrimeFields) {
  for (long p : {5L, 7L}) {
    Field f = Field::prime(p);
    std::vector<SuperAlgebra> cases{
        matrix_superalgebra(1, 1, f),
        matrix_superalgebra(2, 0, f),
        quadratic_graded(s(f, 1)),
        quadratic_graded(s(f, 2)),
        trivially_graded(quadratic_graded(s(f, 1))),
        trivially_graded(quadratic_graded(s(f, 2))),
        graded_quaternion(s(f, 1), s(f, 1)),
        graded_quaternion(s(f, 2), s(f, 3)),
        trivially_graded(graded_quaternion(s(f, 1), s(f, -1))),
        upper_triangular(f),
        direct_sum(base_algebra(f)),
        direct_sum(quadratic_graded(s(f, 1))),
        graded_tensor(quadratic_graded(s(f, 2)), trivially_graded(quadratic_graded(s(f, 3)))),
    };
    if (p == 7) cases.push_back(clifford(f, {s(f, 1), s(f, 3)}));
    for (const auto& a : cases) EXPECT_EQ(is_graded_simple(a), brute_graded_simple(a)) << a.recipe()->to_string();
  }
}

TEST(Division, Examples) {
  EXPECT_TRUE(is_division_superalgebra(quadratic_graded(q(2))));
  EXPECT_TRUE(is_division_superalgebra(graded_quaternion(q(-1), q(-1))));
  EXPECT_FALSE(is_division_superalgebra(matrix_superalgebra(1, 1, QQ())));
  EXPECT_TRUE(is_division_superalgebra(trivially_graded(ungraded_quaternion(q(-1), q(-1)))));
  EXPECT_FALSE(is_division_superalgebra(trivially_graded(ungraded_quaternion(q(1), q(1)))));
  // <1,1>: A_0 = Q(uv) with (uv)^2 = -1 is a field and u is invertible
  EXPECT_TRUE(is_division_superalgebra(graded_quaternion(q(1), q(1))));
  EXPECT_FALSE(is_division_superalgebra(trivially_graded(graded_quaternion(q(1), q(1)))));
  // graded division although F x F ungraded
  EXPECT_TRUE(is_division_superalgebra(quadratic_graded(q(1))));
}

TEST(Idempotent, Examples) {
  SuperAlgebra m11 = matrix_superalgebra(1, 1, QQ());
  EXPECT_EQ(find_idempotent_for_minimal_ideal(m11, m11.basis(0)), m11.basis(0));
  EXPECT_EQ(find_idempotent_for_minimal_ideal(m11, m11.basis(1)), m11.basis(0));
  SuperAlgebra m2 = matrix_superalgebra(2, 0, QQ());
  Element x = m2.basis(1);
  Element e = find_idempotent_for_minimal_ideal(m2, x);
  EXPECT_EQ(e * e, e);
  EXPECT_EQ(e * x, x);
  // eA = xA
  std::vector<Vec> ea, xa;
  for (std::size_t i = 0; i < 4; ++i) {
    ea.push_back((e * m2.basis(i)).coords());
    xa.push_back((x * m2.basis(i)).coords());
  }
  auto both = ea;
  both.insert(both.end(), xa.begin(), xa.end());
  EXPECT_EQ(rank(Matrix::from_columns(QQ(), 4, ea)), rank(Matrix::from_columns(QQ(), 4, both)));
  EXPECT_EQ(rank(Matrix::from_columns(QQ(), 4, xa)), rank(Matrix::from_columns(QQ(), 4, both)));
}

TEST(Classify, Examples) {
  SuperAlgebra m21 = matrix_superalgebra(2, 1, QQ());
  auto r = classify_css(m21);
  EXPECT_EQ(r.type, CssType::Even);
  EXPECT_EQ(*r.a, q(1));
  EXPECT_TRUE(r.split);
  Vec z = zero_vec(QQ(), 9);
  z[0] = q(1);
  z[4] = q(1);
  z[8] = q(-1);
  EXPECT_EQ(r.z->coords(), z);

  SuperAlgebra h = graded_quaternion(q(-1), q(-1));
  r = classify_css(h);
  EXPECT_EQ(r.type, CssType::Even);
  EXPECT_EQ(*r.a, q(-1));
  EXPECT_FALSE(r.split);
  EXPECT_EQ(r.z->coords(), unit_vec(QQ(), 4, 3));

  r = classify_css(quadratic_graded(q(3)));
  EXPECT_EQ(r.type, CssType::Odd);
  EXPECT_EQ(*r.a, q(3));
  EXPECT_EQ(classify_css(matrix_superalgebra(2, 0, QQ())).type, CssType::TriviallyGraded);
  EXPECT_THROW(classify_css(trivially_graded(quadratic_graded(q(1)))), Error);
  EXPECT_THROW(classify_css(upper_triangular(QQ())), Error);
}

TEST(Classify, EvenZAnticommutesWithOdd) {
  for (auto a : {graded_quaternion(q(-1), q(-1)), graded_quaternion(q(2), q(5)), matrix_superalgebra(2, 2, QQ()),
                 clifford(QQ(), {q(1), q(1)}), clifford(QQ(), {q(1), q(2), q(-3), q(5)})}) {
    auto r = classify_css(a);
    ASSERT_EQ(r.type, CssType::Even);
    EXPECT_EQ(*r.z * *r.z, a.scalar(*r.a));
    EXPECT_EQ(r.split, is_square(*r.a).is_square);
    for (auto i : a.indices_of_parity(1)) EXPECT_EQ(a.basis(i) * *r.z, -(*r.z * a.basis(i)));
  }
}

TEST(OddDecompose, Examples) {
  for (auto a : {quadratic_graded(q(7)), graded_tensor(trivially_graded(matrix_superalgebra(2, 0, QQ())), quadratic_graded(q(5))),
                 clifford(QQ(), {q(1), q(2), q(3)})}) {
    OddDecomposition d = odd_decompose(a);
    ASSERT_EQ(d.iso.rows(), a.dim());
    EXPECT_TRUE(inverse(d.iso));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec ei = unit_vec(QQ(), a.dim(), i), ej = unit_vec(QQ(), a.dim(), j);
        EXPECT_EQ(d.iso * d.tensor.mul(ei, ej), a.mul(d.iso * ei, d.iso * ej));
      }
  }
  EXPECT_THROW(odd_decompose(matrix_superalgebra(2, 0, QQ())), Error);
}

TEST(EvenSplit, Examples) {
  SuperAlgebra m21 = matrix_superalgebra(2, 1, QQ());
  EvenSplit s21 = even_split_idempotents(m21);
  Vec ep = zero_vec(QQ(), 9), em = zero_vec(QQ(), 9);
  ep[0] = q(1);
  ep[4] = q(1);
  em[8] = q(1);
  EXPECT_EQ(s21.e_plus.coords(), ep);
  EXPECT_EQ(s21.e_minus.coords(), em);
  EXPECT_EQ(s21.dim_plus, 4u);
  EXPECT_EQ(s21.dim_minus, 1u);
  EvenSplit s11 = even_split_idempotents(matrix_superalgebra(1, 1, QQ()));
  EXPECT_EQ(s11.dim_plus, 1u);
  EXPECT_EQ(s11.dim_minus, 1u);
  EXPECT_EQ(s11.e_plus + s11.e_minus, s11.e_plus.parent().one());
  EXPECT_THROW(even_split_idempotents(graded_quaternion(q(-1), q(-1))), Error);
}

TEST(Validation, RejectsCorruptedTables) {
  std::mt19937 rng(41);
  std::vector<SuperAlgebra> bases{matrix_superalgebra(1, 1, QQ()), graded_quaternion(q(2), q(3)),
                                  matrix_superalgebra(2, 0, QQ())};
  int rejected = 0;
  for (int k = 0; k < 100; ++k) {
    const SuperAlgebra& b = bases[k % bases.size()];
    auto c = dense(b);
    std::uniform_int_distribution<std::size_t> pos(0, c.size() - 1);
    std::uniform_int_distribution<long> val(1, 5);
    c[pos(rng)] += q(val(rng));
    try {
      SuperAlgebra::from_dense(QQ(), b.parities(), c, b.unit());
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidAlgebra);
      ++rejected;
    }
  }
  EXPECT_EQ(rejected, 100);
  // odd unit
  EXPECT_THROW(SuperAlgebra::from_dense(QQ(), {1}, {q(1)}, {q(1)}), Error);
}
