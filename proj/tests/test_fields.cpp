#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace superalg;
using namespace testing_helpers;

namespace {

Scalar sq2(long x, long y) { return Scalar(Field::quadratic(2), Rational(x), Rational(y)); }

Scalar random_nonzero(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-30, 30), den(1, 12);
  for (;;) {
    Scalar s = f.is_prime() ? Scalar(f, d(rng)) : Scalar(f, Rational(d(rng), den(rng)));
    if (f.is_quadratic()) s = s + Scalar(f, Rational(d(rng), den(rng))) * Scalar::generator(f);
    if (!s.is_zero()) return s;
  }
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-60, 60), den(1, 20);
  for (;;) {
    Rational r(d(rng), den(rng));
    r.canonicalize();
    if (sgn(r) != 0) return r;
  }
}

std::vector<Field> all_fields() {
  return {QQ(), Field::quadratic(-1), Field::quadratic(2), Field::quadratic(-3), Field::prime(5), Field::prime(7),
          Field::prime(13)};
}

}  // namespace

TEST(Field, Validation) {
  EXPECT_THROW(Field::quadratic(4), Error);
  EXPECT_THROW(Field::quadratic(1), Error);
  EXPECT_THROW(Field::quadratic(0), Error);
  EXPECT_THROW(Field::quadratic(12), Error);
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(2), Error);
  EXPECT_EQ(Field::quadratic(-1).to_string(), "Q(sqrt(-1))");
  EXPECT_EQ(Field::prime(7).to_string(), "GF(7)");
}

TEST(Arith, Examples) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(sq2(1, 1) * sq2(1, -1), sq2(-1, 0));
  Field f7 = Field::prime(7);
  EXPECT_EQ(arith(s(f7, 3), s(f7, 5), ArithOp::Div), s(f7, 2));
  for (long a = 1; a < 7; ++a) EXPECT_EQ(s(f7, a) * s(f7, a).inverse(), Scalar::one(f7));
  EXPECT_THROW(q(1) / q(0), Error);
  EXPECT_THROW(q(1) + s(f7, 1), Error);
}

TEST(Arith, CanonicalForm) {
  EXPECT_EQ(q(4, -6).to_string(), "-2/3");
  EXPECT_EQ(s(Field::prime(5), -1).to_string(), "gf(5):4");
  EXPECT_EQ(gi(3, 2).to_string(), "3/1+2/1*sqrt(-1)");
  for (const auto& f : all_fields()) {
    std::mt19937 rng(3);
    for (int k = 0; k < 50; ++k) {
      Scalar x = random_nonzero(f, rng);
      EXPECT_EQ(Scalar::parse(f, x.to_string()), x);
    }
  }
  EXPECT_EQ(Scalar::parse(Field::quadratic(-1), "3*sqrt(-1)"), gi(0, 3));
  EXPECT_EQ(Scalar::parse(QQ(), "-7/14"), q(-1, 2));
  EXPECT_THROW(Scalar::parse(QQ(), "sqrt(2)"), Error);
  EXPECT_THROW(Scalar::parse(QQ(), "1/"), Error);
}

TEST(Squares, Examples) {
  auto r = is_square(q(4));
  EXPECT_TRUE(r.is_square);
  EXPECT_EQ(*r.witness * *r.witness, q(4));
  Field f5 = Field::prime(5);
  r = is_square(s(f5, -1));
  ASSERT_TRUE(r.is_square);
  EXPECT_EQ(*r.witness * *r.witness, s(f5, -1));
  EXPECT_FALSE(is_square(q(2)).is_square);
  EXPECT_TRUE(square_class_equal(q(8), q(2)));
  EXPECT_FALSE(square_class_equal(q(2), q(3)));
  Field f7 = Field::prime(7);
  // both nonresidues: 3/5 = 2 = 3^2 mod 7
  EXPECT_TRUE(square_class_equal(s(f7, 3), s(f7, 5)));
  EXPECT_FALSE(square_class_equal(s(f7, 3), s(f7, 2)));
  EXPECT_THROW(is_square(q(0)), Error);
  // 2i = (1+i)^2
  EXPECT_TRUE(is_square(gi(0, 2)).is_square);
  EXPECT_FALSE(is_square(gi(0, 1)).is_square);
  EXPECT_TRUE(is_square(sq2(3, 2)).is_square);  // (1 + sqrt 2)^2
  EXPECT_TRUE(is_square(sq2(2, 0)).is_square);
}

TEST(Squares, SquaresOfRandomElements) {
  for (const auto& f : all_fields()) {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
      Scalar x = random_nonzero(f, rng);
      auto r = is_square(x * x);
      ASSERT_TRUE(r.is_square) << f.to_string() << " " << x.to_string();
      EXPECT_TRUE(*r.witness == x || *r.witness == -x);
    }
  }
}

TEST(Squares, ClassEqualityMatchesProduct) {
  for (const auto& f : all_fields()) {
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
      Scalar a = random_nonzero(f, rng), b = random_nonzero(f, rng);
      EXPECT_EQ(square_class_equal(a, b), is_square(a * b).is_square);
    }
  }
}

TEST(Squares, RepresentativeOverQ) {
  EXPECT_EQ(*square_class_representative(q(12)), q(3));
  EXPECT_EQ(*square_class_representative(q(-8, 9)), q(-2));
  EXPECT_FALSE(square_class_representative(gi(1, 1)));
}

TEST(Conjugation, Examples) {
  EXPECT_EQ(conj(gi(3, 2)), gi(3, -2));
  EXPECT_EQ(norm(gi(1, 1)), gi(2, 0));
  Scalar theta = Scalar::generator(Field::quadratic(-1));
  EXPECT_EQ(norm(theta * theta), gi(1, 0));
  EXPECT_EQ(trace(gi(3, 5)), gi(6, 0));
  EXPECT_THROW(conj(q(1)), Error);
}

TEST(Factor, Basics) {
  auto f = factorize(Integer(360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].first, 2);
  EXPECT_EQ(f[0].second, 3);
  EXPECT_TRUE(is_prime(Integer(1000003)));
  EXPECT_FALSE(is_squarefree(Integer(18)));
  // product of two primes above the trial bound
  Integer big = Integer(1000003) * Integer(1000033);
  auto g = factorize(big);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].first * g[1].first, big);
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::infinity()), -1);
  for (long b : {2, -3, 5, 7})
    for (auto v : {Place::infinity(), Place::at(2), Place::at(3), Place::at(5)}) EXPECT_EQ(hilbert_symbol(1, b, v), 1);
  EXPECT_EQ(hilbert_symbol(2, 3, Place::at(3)), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::at(2)), -1);
  EXPECT_TRUE(quaternion_is_split(1, 7));
  EXPECT_FALSE(quaternion_is_split(-1, -1));
  EXPECT_TRUE(quaternion_is_split(-1, 2));
  EXPECT_FALSE(quaternion_is_split(-1, 3));
  EXPECT_FALSE(quaternion_is_split(-1, -3));
}

TEST(Hilbert, Bilinearity) {
  std::mt19937 rng(23);
  for (auto v : {Place::infinity(), Place::at(2), Place::at(3), Place::at(5), Place::at(7)}) {
    for (int k = 0; k < 100; ++k) {
      Rational a = random_rational(rng), b1 = random_rational(rng), b2 = random_rational(rng);
      EXPECT_EQ(hilbert_symbol(a, b1 * b2, v), hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
      EXPECT_EQ(hilbert_symbol(a, b1, v), hilbert_symbol(b1, a, v));
    }
  }
}

TEST(Hilbert, ProductFormula) {
  std::mt19937 rng(29);
  for (int k = 0; k < 100; ++k) {
    Rational a = random_rational(rng), b = random_rational(rng);
    int prod = 1;
    for (const auto& v : relevant_places(a, b)) prod *= hilbert_symbol(a, b, v);
    EXPECT_EQ(prod, 1) << a << " " << b;
  }
}

TEST(NormEquation, Examples) {
  auto r = norm_equation(-1, 1);
  ASSERT_TRUE(r.solvable && r.witness);
  EXPECT_EQ(norm(*r.witness), gi(1, 0));
  EXPECT_FALSE(norm_equation(-1, 3).solvable);
  r = norm_equation(-1, 2);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(norm(*r.witness), gi(2, 0));
  EXPECT_THROW(norm_equation(-1, 0), Error);
}

TEST(NormEquation, WitnessesAreExact) {
  std::mt19937 rng(31);
  for (std::int64_t d : {-1, 2, -3, 5, -7}) {
    Field k = Field::quadratic(d);
    for (int n = 0; n < 30; ++n) {
      // norms of random elements are always solvable
      Scalar x = random_nonzero(k, rng);
      Rational c = norm(x).re();
      auto r = norm_equation(d, c);
      EXPECT_TRUE(r.solvable);
      if (r.witness) EXPECT_EQ(norm(*r.witness).re(), c);
      Rational c2 = random_rational(rng);
      auto r2 = norm_equation(d, c2);
      EXPECT_EQ(r2.solvable, quaternion_is_split(Rational(d), c2));
      if (r2.witness) EXPECT_EQ(norm(*r2.witness).re(), c2);
    }
  }
}

TEST(NormEquation, SearchBoundLimitsWitness) {
  // 21 = N(1 + 2 sqrt -5); a bound of 1 may stop short of it
  auto r = norm_equation(-5, 21, 1);
  if (r.solvable && !r.witness) EXPECT_TRUE(r.witness_search_exhausted);
  auto full = norm_equation(-5, 21);
  EXPECT_EQ(full.solvable, r.solvable);
}
