#pragma once

#include <random>

#include "superalg/constructors.hpp"
#include "superalg/firstkind.hpp"
#include "superalg/secondkind.hpp"

namespace testing_helpers {

using namespace superalg;

inline Field QQ() { return Field::rationals(); }
inline Scalar q(long n, long d = 1) { return Scalar(Field::rationals(), Rational(n, d)); }
inline Scalar s(const Field& f, long n) { return Scalar(f, n); }
/// x + y i in Q(i).
inline Scalar gi(long x, long y) { return Scalar(Field::quadratic(-1), Rational(x), Rational(y)); }

inline Element random_homogeneous(const SuperAlgebra& a, int parity, std::mt19937& rng, long bound = 3) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Vec v = zero_vec(a.field(), a.dim());
  for (auto i : a.indices_of_parity(parity)) {
    v[i] = Scalar(a.field(), d(rng));
    if (a.field().is_quadratic()) v[i] = v[i] + Scalar(a.field(), d(rng)) * Scalar::generator(a.field());
  }
  return a.element(v);
}

/// Falls back to an even element when no odd one turns up (M_{n+m} with n != m).
inline Element random_invertible(const SuperAlgebra& a, int parity, std::mt19937& rng) {
  for (int k = 0;; ++k) {
    Element e = random_homogeneous(a, k < 50 ? parity : 0, rng);
    if (!e.is_zero() && invert(e)) return e;
  }
}

}  // namespace testing_helpers
