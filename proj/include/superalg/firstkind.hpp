#pragma once

// F-linear superantiautomorphisms and superinvolutions: existence decisions
// with certificates, the square-class invariant, and the normalization of a
// superantiautomorphism to one whose square is the grading automorphism.

#include <optional>
#include <string>
#include <vector>

#include "superalg/maps.hpp"

namespace superalg {

enum class Verdict { Exists, NotExists, Unsupported };
std::string to_string(Verdict v);

/// What an Exists witness satisfies.
enum class WitnessProperty { Superinvolution, Superantiautomorphism, SquareIsNu };
std::string to_string(WitnessProperty p);

struct Certificate {
  Verdict verdict = Verdict::Unsupported;
  std::optional<GradedMap> witness;
  WitnessProperty property = WitnessProperty::Superinvolution;
  std::string reason_tag;
  std::optional<Scalar> invariant_data;
  std::vector<std::string> trace;
};

/// Reruns the axiom checkers for c.property. A missing witness fails.
AxiomReport verify_witness(const SuperAlgebra& a, const Certificate& c);

/// A grading-preserving involution in the ordinary sense, s(xy) = s(y)s(x),
/// derived from the recipe. nullopt when the recipe gives none.
std::optional<GradedMap> recipe_involution(const SuperAlgebra& a);
bool is_ordinary_involution(const SuperAlgebra& a, const GradedMap& s);

Certificate decide_superinvolution_first_kind(const SuperAlgebra& a);
Certificate decide_superantiautomorphism(const SuperAlgebra& a);

struct SquareInvariant {
  Element a;     // eta^2 = iota_a
  Scalar value;  // a eta(a)
  std::optional<Scalar> representative;
};
/// Throws NotAntiautomorphism, NotEvenCSS.
SquareInvariant superanti_square_invariant(const SuperAlgebra& a, const GradedMap& eta);

/// Certificate whose witness phi satisfies phi^2 = nu. Throws
/// NoSuperantiautomorphism when eta is not one, NonSquareInvariant when the
/// required square root is missing.
Certificate normalize_to_grading(const SuperAlgebra& a, const GradedMap& eta);

/// Square class of eta(a) a against that of z^2.
bool check_z_square_corollary(const SuperAlgebra& a, const GradedMap& eta);

Certificate clifford_first_kind(const Field& f, const std::vector<Scalar>& q);

/// Adjoint of the standard form on F^{n|m}: odd alternating when n = m,
/// otherwise even with the alternating block on the even-sized side.
GradedMap splitsuper_superinvolution(int n, int m, const Field& f);

}  // namespace superalg
