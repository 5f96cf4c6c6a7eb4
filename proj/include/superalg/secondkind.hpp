#pragma once

// Superinvolutions of the second kind over K = Q(theta), theta^2 = t:
// the conjugate algebra, the corestriction cor_{K/Q}(A) inside A (x) conj(A),
// its action on A, the quaternion obstruction attached to a semilinear
// superantiautomorphism, and the resulting decisions.

#include <optional>
#include <string>
#include <vector>

#include "superalg/firstkind.hpp"

namespace superalg {

/// Same ring with K acting through conjugation: same parities and product
/// order, conjugated structure constants. Throws NotOverQuadraticExtension.
SuperAlgebra conjugate_superalgebra(const SuperAlgebra& a);

struct Corestriction {
  SuperAlgebra t;    // A (x) conj(A) over K, basis i * dim(A) + j
  GradedMap pi;      // semilinear: e_i (x) e_j -> (-1)^{|i||j|} e_j (x) e_i
  SuperAlgebra cor;  // over Q
  /// Column r: the r-th basis vector of cor in K-coordinates of t.
  std::vector<Vec> basis;
  bool pi_multiplicative = false;
};

/// Throws NotOverQuadraticExtension, NotCSS.
Corestriction build_corestriction(const SuperAlgebra& a);

/// x . (lambda e_i (x) e_j) = conj(lambda) (-1)^{|i||x|} xi(e_i) x e_j for
/// s in K-coordinates of A (x) conj(A).
Vec corestriction_module_action(const SuperAlgebra& a, const GradedMap& xi, const Vec& x, const Vec& s);

/// Rational matrix of x -> x . s on the Q-basis e_0, theta e_0, e_1, ... of A.
Matrix action_matrix(const SuperAlgebra& a, const GradedMap& xi, const Vec& s);

/// Q-linear endomorphisms of A commuting with the action of cor, as
/// matrices on the Q-basis above.
std::vector<Matrix> cor_centralizer(const SuperAlgebra& a, const GradedMap& xi, const Corestriction& c);
/// The matrix of x -> theta x.
Matrix theta_matrix(const SuperAlgebra& a);
bool in_span(const std::vector<Matrix>& basis, const Matrix& m);

/// For A = K<sqrt mu>: 1 (x) 1, theta (u (x) u), u (x) 1 + 1 (x) u,
/// theta (u (x) 1) - theta (1 (x) u), in K-coordinates of A (x) conj(A).
std::vector<Vec> quadratic_cor_spanning_set(const SuperAlgebra& a);

struct CorClass {
  int b_parity = 0;
  Vec b;          // xi^2 = iota_b
  Scalar c;       // xi(b) b in Q
  Scalar t;
  bool split = false;  // (t, c) split; false when b is odd
};

/// Throws NotSemilinearAntiauto.
CorClass xi_square_class(const SuperAlgebra& a, const GradedMap& xi);

/// A semilinear superantiautomorphism read off the recipe, when one is known.
std::optional<GradedMap> second_kind_starter(const SuperAlgebra& a);

Certificate decide_superinvolution_second_kind(const SuperAlgebra& a);
/// Throws ZeroParameter, NotOverQuadraticExtension.
Certificate quadratic_second_kind(const Scalar& mu);
/// Throws NotOddType, UnsupportedA0.
Certificate odd_type_second_kind(const SuperAlgebra& a);
/// Semilinear phi with phi^2 = nu. Throws UnsupportedShape.
Certificate nu_square_second_kind_obstruction(const SuperAlgebra& a);

}  // namespace superalg
