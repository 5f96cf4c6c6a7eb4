#pragma once

// The standard superalgebras and closure operations. Each result carries its
// recipe so later stages can route on how the algebra was built.
//
// Graded tensor products use (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'
// with basis index iA * dim(B) + iB. Matrix bases are row-major, with the D
// coordinate last: index (i * N + j) * dim(D) + t. Clifford monomials e_S are
// indexed by the bitmask of S.

#include <vector>

#include "superalg/superalg.hpp"

namespace superalg {

/// The field itself as a one-dimensional algebra.
SuperAlgebra base_algebra(const Field& f);
/// Ungraded quaternion algebra (a, b)_F on 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji.
SuperAlgebra ungraded_quaternion(const Scalar& a, const Scalar& b);
/// Forgets the grading of b (every basis vector becomes even).
SuperAlgebra trivially_graded(const SuperAlgebra& b);
/// F<sqrt a> = F + Fu, u odd, u^2 = a.
SuperAlgebra quadratic_graded(const Scalar& a);
SuperAlgebra graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b);
/// <a, b> = F<sqrt a> (x) F<sqrt b> on the basis 1, u, v, uv.
SuperAlgebra graded_quaternion(const Scalar& a, const Scalar& b);
/// M_{n+m}(F).
SuperAlgebra matrix_superalgebra(int n, int m, const Field& f);
/// (n+m) x (n+m) matrices over d; E_ij d has parity block(i, j) + |d|.
SuperAlgebra matrix_superalgebra(int n, int m, const SuperAlgebra& d);
/// Clifford algebra of the diagonal form <q_1, ..., q_r>, r <= 6.
SuperAlgebra clifford(const Field& f, const std::vector<Scalar>& q);
/// x o y = (-1)^{|x||y|} y x.
SuperAlgebra superopposite(const SuperAlgebra& a);

/// Rebuilds an algebra from its recipe.
SuperAlgebra build_from_recipe(const RecipePtr& r, const Field& f);

}  // namespace superalg
