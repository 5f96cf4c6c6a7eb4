#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace superalg;
using namespace testing_helpers;

namespace {

Field Qi() { return Field::quadratic(-1); }

}  // namespace

TEST(Conjugate, RelationsAndDoubleConjugate) {
  SuperAlgebra a = quadratic_graded(gi(0, 1));
  SuperAlgebra b = conjugate_superalgebra(a);
  Vec u = unit_vec(Qi(), 2, 1);
  EXPECT_EQ(b.mul(u, u), gi(0, -1) * b.unit());
  SuperAlgebra bb = conjugate_superalgebra(b);
  EXPECT_EQ(bb.mul(u, u), a.mul(u, u));
  EXPECT_THROW(conjugate_superalgebra(quadratic_graded(q(2))), Error);
}

TEST(Corestriction, QuadraticExample) {
  SuperAlgebra a = quadratic_graded(gi(0, 1));
  Corestriction c = build_corestriction(a);
  EXPECT_EQ(c.cor.dim(), 4u);
  EXPECT_TRUE(c.pi_multiplicative);
  EXPECT_TRUE(square(c.pi).matrix.is_identity());
  auto span = quadratic_cor_spanning_set(a);
  for (const auto& v : span) EXPECT_EQ(superalg::apply(c.pi, v), v);
  // (theta u (x) u)^2 = N(theta mu)
  Vec w = c.t.mul(span[1], span[1]);
  EXPECT_EQ(w, norm(Scalar::generator(Qi()) * gi(0, 1)) * c.t.unit());
  ClassificationReport rep = classify_css(c.cor);
  EXPECT_EQ(rep.type, CssType::Even);
}

TEST(Corestriction, DimensionIsSquare) {
  for (auto a : {matrix_superalgebra(1, 1, Qi()), graded_quaternion(gi(0, 1), gi(1, 1))}) {
    Corestriction c = build_corestriction(a);
    EXPECT_EQ(c.cor.dim(), a.dim() * a.dim());
  }
}

TEST(ModuleAction, UnitAndAssociativity) {
  std::mt19937 rng(17);
  SuperAlgebra a = quadratic_graded(gi(2, 0));
  auto xi = second_kind_starter(a);
  ASSERT_TRUE(xi);
  Corestriction c = build_corestriction(a);
  Vec x = random_homogeneous(a, 1, rng).coords();
  EXPECT_EQ(corestriction_module_action(a, *xi, x, c.t.unit()), x);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int k = 0; k < 50; ++k) {
    Vec s = zero_vec(Qi(), c.t.dim()), s2 = s;
    int p1 = k % 2, p2 = (k / 2) % 2;
    for (std::size_t r = 0; r < c.basis.size(); ++r) {
      if (c.cor.parity(r) == p1) s = s + Scalar(Qi(), d(rng)) * c.basis[r];
      if (c.cor.parity(r) == p2) s2 = s2 + Scalar(Qi(), d(rng)) * c.basis[r];
    }
    Vec y = random_homogeneous(a, k % 3 == 0, rng).coords();
    Vec lhs = corestriction_module_action(a, *xi, corestriction_module_action(a, *xi, y, s), s2);
    EXPECT_EQ(lhs, corestriction_module_action(a, *xi, y, c.t.mul(s, s2)));
  }
}

TEST(Centralizer, DimensionFourContainingK) {
  for (auto mu : {gi(0, 1), gi(1, 0), gi(3, 0), gi(2, 1)}) {
    SuperAlgebra a = quadratic_graded(mu);
    auto xi = second_kind_starter(a);
    if (!xi) continue;
    Corestriction c = build_corestriction(a);
    auto cent = cor_centralizer(a, *xi, c);
    EXPECT_EQ(cent.size(), 4u);
    EXPECT_TRUE(in_span(cent, theta_matrix(a)));
  }
}

TEST(SecondKind, QuadraticI) {
  SuperAlgebra a = quadratic_graded(gi(0, 1));
  Certificate c = decide_superinvolution_second_kind(a);
  ASSERT_EQ(c.verdict, Verdict::Exists);
  EXPECT_TRUE(c.witness->semilinear);
  EXPECT_TRUE(is_superinvolution(a, *c.witness));
  Certificate d = quadratic_second_kind(gi(0, 1));
  ASSERT_EQ(d.verdict, Verdict::Exists);
  EXPECT_TRUE(d.witness->matrix.is_identity());
}

TEST(SecondKind, QuadraticSpotValues) {
  EXPECT_EQ(quadratic_second_kind(gi(1, 0)).verdict, Verdict::Exists);
  EXPECT_EQ(quadratic_second_kind(gi(3, 0)).verdict, Verdict::Exists);
  EXPECT_EQ(quadratic_second_kind(gi(1, 1)).verdict, Verdict::NotExists);
  EXPECT_THROW(quadratic_second_kind(gi(0, 0)), Error);
}

TEST(SecondKind, AgreesWithShortcut) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(-6, 6);
  for (long dd : {-1L, 2L, -3L}) {
    Field k = Field::quadratic(dd);
    for (int n = 0; n < 50; ++n) {
      Scalar mu(k, Rational(d(rng)), Rational(d(rng)));
      if (mu.is_zero()) continue;
      Certificate full = decide_superinvolution_second_kind(quadratic_graded(mu));
      Certificate shortcut = quadratic_second_kind(mu);
      EXPECT_EQ(full.verdict, shortcut.verdict) << mu.to_string();
      if (full.verdict == Verdict::Exists) EXPECT_TRUE(is_superinvolution(quadratic_graded(mu), *full.witness));
    }
  }
}

TEST(SecondKind, MatrixAlwaysExists) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}}) {
    SuperAlgebra a = matrix_superalgebra(n, m, Qi());
    Certificate c = decide_superinvolution_second_kind(a);
    ASSERT_EQ(c.verdict, Verdict::Exists);
    EXPECT_TRUE(is_superinvolution(a, *c.witness));
  }
}

TEST(SecondKind, ClosingCounterexamples) {
  SuperAlgebra a = quadratic_graded(gi(0, 1));
  EXPECT_EQ(decide_superinvolution_second_kind(a).verdict, Verdict::Exists);
  EXPECT_EQ(nu_square_second_kind_obstruction(a).verdict, Verdict::NotExists);
  SuperAlgebra t = graded_tensor(a, quadratic_graded(gi(0, 3)));
  Certificate c = decide_superinvolution_second_kind(t);
  ASSERT_EQ(c.verdict, Verdict::Exists);
  EXPECT_TRUE(is_superinvolution(t, *c.witness));
  ClassificationReport rep = classify_css(t);
  EXPECT_EQ(*rep.a, gi(3, 0));
  EXPECT_EQ(nu_square_second_kind_obstruction(t).verdict, Verdict::NotExists);
  Certificate m = nu_square_second_kind_obstruction(matrix_superalgebra(1, 1, Qi()));
  ASSERT_EQ(m.verdict, Verdict::Exists);
  EXPECT_EQ(square(*m.witness), grading_automorphism(matrix_superalgebra(1, 1, Qi())));
}

TEST(SecondKind, OddType) {
  for (auto mu : {gi(0, 1), gi(2, 0)}) {
    SuperAlgebra a = graded_tensor(trivially_graded(matrix_superalgebra(2, 0, Qi())), quadratic_graded(mu));
    Certificate c = odd_type_second_kind(a);
    ASSERT_EQ(c.verdict, Verdict::Exists);
    EXPECT_TRUE(is_superinvolution(a, *c.witness));
  }
  EXPECT_THROW(odd_type_second_kind(matrix_superalgebra(1, 1, Qi())), Error);
}

TEST(XiSquare, SuperinvolutionGivesTrivialClass) {
  SuperAlgebra a = matrix_superalgebra(1, 1, Qi());
  Certificate c = decide_superinvolution_second_kind(a);
  CorClass cls = xi_square_class(a, *c.witness);
  EXPECT_EQ(cls.b_parity, 0);
  EXPECT_TRUE(cls.split);
  EXPECT_TRUE(square_class_equal(cls.c, q(1)));
}

TEST(XiSquare, OddB) {
  // lambda^2 = -conj(mu)/mu with N(lambda) = -1 gives xi^2 = nu = iota_u.
  Field k = Field::quadratic(2);
  Scalar mu(k, Rational(1), Rational(1));
  SuperAlgebra a = quadratic_graded(mu);
  auto xi = second_kind_starter(a);
  ASSERT_TRUE(xi);
  CorClass cls = xi_square_class(a, *xi);
  EXPECT_EQ(cls.b_parity, norm((*xi).matrix(1, 1)) == -Scalar::one(k) ? 1 : 0);
}
