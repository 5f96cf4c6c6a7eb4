#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace superalg;
using namespace testing_helpers;

namespace {

GradedMap diag_map(const Field& f, const std::vector<long>& d, bool semilinear = false) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Scalar(f, d[i]);
  return GradedMap{m, 0, semilinear};
}

// (a, b; c, d) -> (d, -b; c, a) on M_{1+1}, basis E11, E12, E21, E22.
GradedMap tau11() {
  Matrix m(QQ(), 4, 4);
  m(3, 0) = q(1);
  m(1, 1) = q(-1);
  m(2, 2) = q(1);
  m(0, 3) = q(1);
  return GradedMap{m, 0, false};
}

HermitianSuperform form_over_q(int d0, int d1, int eps, int ell, const std::vector<std::vector<long>>& g) {
  SuperAlgebra delta = base_algebra(QQ());
  HermitianSuperform h{delta, identity_map(delta), d0, d1, eps, ell, {}};
  for (const auto& row : g) {
    std::vector<Vec> r;
    for (long x : row) r.push_back({q(x)});
    h.gram.push_back(r);
  }
  return h;
}

std::vector<Vec> random_module_vector(const HermitianSuperform& h, int parity, std::mt19937& rng) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < h.size(); ++i) {
    int want = (parity + h.vparity(i)) % 2;
    v.push_back(random_homogeneous(h.delta, want, rng, 2).coords());
  }
  return v;
}

}  // namespace

TEST(Superanti, Examples) {
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
    SuperAlgebra a = matrix_superalgebra(n, m, QQ());
    EXPECT_TRUE(is_superantiautomorphism(a, splitsuper_phi(n, m, a)));
  }
  SuperAlgebra m11 = matrix_superalgebra(1, 1, QQ());
  AxiomReport r = check_superantiautomorphism(m11, grading_automorphism(m11));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.violation);
  Field f5 = Field::prime(5);
  SuperAlgebra qa = quadratic_graded(s(f5, 3));
  EXPECT_TRUE(is_superantiautomorphism(qa, diag_map(f5, {1, 2})));
  Matrix sing(QQ(), 4, 4);
  EXPECT_THROW(check_superantiautomorphism(m11, GradedMap{sing, 0, false}), Error);
}

TEST(Superinvolution, Examples) {
  SuperAlgebra m11 = matrix_superalgebra(1, 1, QQ());
  EXPECT_TRUE(is_superinvolution(m11, tau11()));
  SuperAlgebra m12 = matrix_superalgebra(1, 2, QQ());
  EXPECT_FALSE(is_superinvolution(m12, splitsuper_phi(1, 2, m12)));
  SuperAlgebra ki = quadratic_graded(gi(0, 1));
  EXPECT_TRUE(is_superinvolution(ki, diag_map(ki.field(), {1, 1}, true)));
  EXPECT_FALSE(is_superinvolution(ki, diag_map(ki.field(), {1, 1}, false)));
}

TEST(Grading, Examples) {
  SuperAlgebra m21 = matrix_superalgebra(2, 1, QQ());
  GradedMap nu = grading_automorphism(m21);
  EXPECT_TRUE(square(nu).matrix.is_identity());
  EXPECT_TRUE(grading_automorphism(matrix_superalgebra(2, 0, QQ())).matrix.is_identity());
  for (auto a : {m21, graded_quaternion(q(-1), q(-1)), clifford(QQ(), {q(1), q(2), q(3), q(5)})}) {
    auto rep = classify_css(a);
    EXPECT_EQ(inner_automorphism(a, *rep.z), grading_automorphism(a));
  }
}

TEST(Inner, Examples) {
  SuperAlgebra m21 = matrix_superalgebra(2, 1, QQ());
  EXPECT_EQ(inner_automorphism(m21, m21.one()), identity_map(m21));
  SuperAlgebra qa = quadratic_graded(q(7));
  EXPECT_EQ(inner_automorphism(qa, qa.basis(1)), grading_automorphism(qa));
  EXPECT_THROW(inner_automorphism(m21, m21.basis(0)), Error);
  EXPECT_THROW(inner_automorphism(qa, qa.one() + qa.basis(1)), Error);
  EXPECT_TRUE(check_graded_automorphism(m21, inner_automorphism(m21, m21.one() + m21.basis(1))).ok);
}

TEST(SolveInner, Examples) {
  SuperAlgebra m11 = matrix_superalgebra(1, 1, QQ());
  EXPECT_EQ(solve_inner(m11, identity_map(m11)), m11.one());
  Element a = solve_inner(m11, grading_automorphism(m11));
  EXPECT_EQ(a.coords(), (Vec{q(1), q(0), q(0), q(-1)}));
  EXPECT_THROW(solve_inner(m11, tau11()), Error);
}

TEST(SolveInner, RoundTrip) {
  std::mt19937 rng(43);
  for (auto a : {matrix_superalgebra(2, 1, QQ()), graded_quaternion(q(2), q(-3)), matrix_superalgebra(1, 1, QQ())}) {
    for (int k = 0; k < 100; ++k) {
      Element b = random_invertible(a, k % 2, rng);
      Element x = solve_inner(a, inner_automorphism(a, b));
      EXPECT_EQ(x.parity(), b.parity());
      // x is a scalar multiple of b
      std::size_t lead = leading_index(b.coords());
      EXPECT_EQ(b[lead] * x, b);
    }
  }
}

TEST(Compose, Examples) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m <= 5; ++m) {
      SuperAlgebra a = matrix_superalgebra(n, m, QQ());
      GradedMap phi = splitsuper_phi(n, m, a);
      EXPECT_EQ(square(phi), grading_automorphism(a)) << n << "+" << m;
      EXPECT_TRUE(compose(phi, *inverse(phi)).matrix.is_identity());
    }
  SuperAlgebra ki = quadratic_graded(gi(1, 2));
  GradedMap c = diag_map(ki.field(), {1, -1}, true);
  c.matrix(1, 1) = gi(0, 1);
  GradedMap sq = square(c);
  EXPECT_FALSE(sq.semilinear);
  // (i conj)^2 = i * conj(i) = 1
  EXPECT_TRUE(sq.matrix.is_identity());
  Vec x{gi(1, 1), gi(2, -3)};
  EXPECT_EQ(superalg::apply(c, x), (Vec{gi(1, -1), gi(0, 1) * gi(2, 3)}));
  EXPECT_THROW(compose(c, identity_map(matrix_superalgebra(1, 1, QQ()))), Error);
}

TEST(QuadraticOracle, ExhaustiveOverPrimeFields) {
  // Graded unital maps of F<sqrt a> are u -> lambda u.
  for (long p : {5L, 7L, 11L, 13L}) {
    Field f = Field::prime(p);
    bool minus_one_square = is_square(s(f, -1)).is_square;
    for (long av = 1; av < p; ++av) {
      SuperAlgebra a = quadratic_graded(s(f, av));
      bool anti = false, inv = false;
      for (long lam = 1; lam < p; ++lam) {
        GradedMap phi = diag_map(f, {1, lam});
        anti = anti || is_superantiautomorphism(a, phi);
        inv = inv || is_superinvolution(a, phi);
      }
      EXPECT_EQ(anti, minus_one_square) << p << " " << av;
      EXPECT_FALSE(inv);
    }
  }
}

TEST(Hermitian, RankOneProjection) {
  HermitianSuperform h = form_over_q(2, 0, 1, 0, {{1, 0}, {0, 1}});
  SuperAlgebra end = endomorphism_algebra(h);
  std::vector<Vec> e0{{q(1)}, {q(0)}};
  Element p = rank_one_map(h, end, e0, e0);
  EXPECT_EQ(p.coords(), (Vec{q(1), q(0), q(0), q(0)}));
  EXPECT_EQ(p * p, p);
}

TEST(Hermitian, AdjointExamples) {
  // odd form on F^{1|1}
  HermitianSuperform odd = form_over_q(1, 1, 1, 1, {{0, 1}, {1, 0}});
  SuperAlgebra end = endomorphism_algebra(odd);
  GradedMap star = adjoint_superinvolution(odd, end);
  EXPECT_TRUE(is_superinvolution(end, star));
  EXPECT_EQ(star, compose(grading_automorphism(end), tau11()));
  HermitianSuperform odd_skew = form_over_q(1, 1, -1, 1, {{0, 1}, {-1, 0}});
  EXPECT_EQ(adjoint_superinvolution(odd_skew, end), tau11());
  // identity Gram on V = V_0 gives the transpose
  HermitianSuperform even = form_over_q(3, 0, 1, 0, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  SuperAlgebra end3 = endomorphism_algebra(even);
  GradedMap t = adjoint_superinvolution(even, end3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t.matrix.column(i * 3 + j), unit_vec(QQ(), 9, j * 3 + i));
  EXPECT_THROW(adjoint_superinvolution(form_over_q(2, 0, 1, 0, {{1, 1}, {1, 1}}), end), Error);
  EXPECT_THROW(form_over_q(1, 1, 1, 0, {{1, 0}, {0, 1}}).validate(), Error);
}

TEST(Hermitian, QuaternionCoefficients) {
  SuperAlgebra d = trivially_graded(ungraded_quaternion(q(-1), q(-3)));
  GradedMap bar = diag_map(QQ(), {1, -1, -1, -1});
  for (auto [d0, d1] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    HermitianSuperform h{d, bar, d0, d1, 1, 0, {}};
    std::size_t n = static_cast<std::size_t>(d0 + d1);
    h.gram.assign(n, std::vector<Vec>(n, zero_vec(QQ(), 4)));
    for (std::size_t i = 0; i < n; ++i) h.gram[i][i] = i < std::size_t(d0) ? d.unit() : unit_vec(QQ(), 4, 1);
    SuperAlgebra end = endomorphism_algebra(h);
    GradedMap star = adjoint_superinvolution(h, end);
    EXPECT_TRUE(is_superinvolution(end, star)) << d0 << "+" << d1;
  }
}

TEST(Hermitian, RankOneIdentities) {
  std::mt19937 rng(47);
  std::vector<HermitianSuperform> forms{
      form_over_q(2, 2, 1, 0, {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}),
      form_over_q(1, 1, 1, 1, {{0, 1}, {1, 0}}),
      form_over_q(1, 1, -1, 1, {{0, 1}, {-1, 0}}),
      form_over_q(2, 0, -1, 0, {{0, 1}, {-1, 0}}),
  };
  for (const auto& h : forms) {
    SuperAlgebra end = endomorphism_algebra(h);
    GradedMap star = adjoint_superinvolution(h, end);
    ASSERT_TRUE(is_superinvolution(end, star));
    for (int k = 0; k < 50; ++k) {
      int pv = k % 2, pw = (k / 2) % 2;
      auto v = random_module_vector(h, pv, rng), w = random_module_vector(h, pw, rng);
      Element hvw = rank_one_map(h, end, v, w), hwv = rank_one_map(h, end, w, v);
      // epsilon (-1)^{vw} for even forms; odd forms shift both parities by ell
      long sign = h.epsilon * (((pv + h.ell) * (pw + h.ell)) % 2 ? -1 : 1);
      EXPECT_EQ(superalg::apply(star, hvw), q(sign) * hwv);
      // h_{v,w} f = h_{v, w f}
      Element f = random_homogeneous(end, k % 2, rng, 2);
      std::vector<Vec> wf(h.size(), zero_vec(QQ(), 1));
      for (std::size_t b = 0; b < h.size(); ++b)
        for (std::size_t a = 0; a < h.size(); ++a)
          wf[b] = wf[b] + h.delta.mul(w[a], Vec{f[a * h.size() + b]});
      EXPECT_EQ(hvw * f, rank_one_map(h, end, v, wf));
    }
  }
}
