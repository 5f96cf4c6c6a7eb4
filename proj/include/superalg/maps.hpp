#pragma once

// Graded (semi)linear maps of a superalgebra, the axiom checkers, inner
// automorphisms and the graded Skolem-Noether solver, plus hermitian
// superforms and their adjoint superinvolutions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superalg/superalg.hpp"

namespace superalg {

/// x -> matrix * conj^semilinear(x). Column j is the image of e_j.
struct GradedMap {
  Matrix matrix;
  int parity = 0;
  bool semilinear = false;

  bool operator==(const GradedMap& o) const {
    return matrix == o.matrix && parity == o.parity && semilinear == o.semilinear;
  }
};

GradedMap identity_map(const SuperAlgebra& a);
Vec apply(const GradedMap& phi, const Vec& x);
Element apply(const GradedMap& phi, const Element& x);
/// phi(e_i e_j), read off the sparse table.
Vec apply_to_product(const SuperAlgebra& a, const GradedMap& phi, std::size_t i, std::size_t j);

/// (phi o psi)(x) = phi(psi(x)).
GradedMap compose(const GradedMap& phi, const GradedMap& psi);
GradedMap square(const GradedMap& phi);
std::optional<GradedMap> inverse(const GradedMap& phi);
/// phi (x) psi on the tensor basis iA * dim(B) + iB, without signs. Both maps
/// must share the semilinear flag.
GradedMap tensor_map(const GradedMap& phi, const GradedMap& psi);
/// Restriction to the span of the given basis vectors, which phi must preserve.
GradedMap restrict_map(const GradedMap& phi, const std::vector<std::size_t>& idx);

struct AxiomReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // basis pair (i, j)
  std::string detail;
};

/// phi(1) = 1 and phi(e_i e_j) = (-1)^{|i||j|} phi(e_j) phi(e_i). Throws
/// NotBijective for singular maps.
AxiomReport check_superantiautomorphism(const SuperAlgebra& a, const GradedMap& phi);
AxiomReport check_superinvolution(const SuperAlgebra& a, const GradedMap& phi);
/// phi(1) = 1, phi(e_i e_j) = phi(e_i) phi(e_j), parity 0, bijective.
AxiomReport check_graded_automorphism(const SuperAlgebra& a, const GradedMap& phi);
bool is_superantiautomorphism(const SuperAlgebra& a, const GradedMap& phi);
bool is_superinvolution(const SuperAlgebra& a, const GradedMap& phi);

GradedMap grading_automorphism(const SuperAlgebra& a);
/// iota_a(x) = (-1)^{|a||x|} a x a^{-1}.
GradedMap inner_automorphism(const SuperAlgebra& a, const Element& x);
/// Homogeneous a with phi = iota_a, first nonzero coordinate 1. Even
/// solutions are tried first. Throws NotInner.
Element solve_inner(const SuperAlgebra& a, const GradedMap& phi);

/// The Prop. M_{n+m}(F) map (a b; c d) -> (a^t, -c^t; b^t, d^t).
GradedMap splitsuper_phi(int n, int m, const SuperAlgebra& a);

// ---- hermitian superforms --------------------------------------------------

/// An epsilon-hermitian form of degree ell on the left Delta-module with
/// basis e_0..e_{d0+d1-1} (the first d0 even). gram[i][j] = h(e_i, e_j) in
/// Delta coordinates.
struct HermitianSuperform {
  SuperAlgebra delta;
  GradedMap bar;  // superinvolution of Delta
  int d0 = 0, d1 = 0;
  int epsilon = 1;
  int ell = 0;
  std::vector<std::vector<Vec>> gram;

  std::size_t size() const { return static_cast<std::size_t>(d0 + d1); }
  int vparity(std::size_t i) const { return i >= static_cast<std::size_t>(d0) ? 1 : 0; }
  /// h(x, y) for module vectors given by Delta coordinates per basis vector.
  Vec h(const std::vector<Vec>& x, const std::vector<Vec>& y) const;
  /// Checks the parity, symmetry and nondegeneracy conditions.
  void validate() const;
};

/// End_Delta(V) as matrix_superalgebra(d0, d1, Delta) acting on the right.
SuperAlgebra endomorphism_algebra(const HermitianSuperform& h);
/// f -> f* with h(xf, y) = (-1)^{|f||y|} h(x, y f*). Throws Degenerate.
GradedMap adjoint_superinvolution(const HermitianSuperform& h, const SuperAlgebra& end);
/// The element a -> h(a, v) w of End_Delta(V).
Element rank_one_map(const HermitianSuperform& h, const SuperAlgebra& end, const std::vector<Vec>& v,
                     const std::vector<Vec>& w);

}  // namespace superalg
