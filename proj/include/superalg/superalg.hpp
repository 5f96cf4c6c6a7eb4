#pragma once

// Finite-dimensional associative superalgebras given by structure constants
// on a homogeneous basis, and the structural queries used by the decision
// procedures (centers, simplicity, division, classification).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superalg/linalg.hpp"

namespace superalg {

enum class RecipeKind {
  Raw,
  Quaternion,  // ungraded (a, b)_F with basis 1, i, j, k
  TriviallyGraded,
  Quadratic,
  GradedQuaternion,
  Matrix,
  Tensor,
  Clifford,
  SuperOpposite,
  Conjugate,
};

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;
class SuperAlgebra;

/// How an algebra was built. Basis orderings are fixed per kind, so a recipe
/// together with a field reproduces the structure constants exactly.
struct Recipe {
  RecipeKind kind = RecipeKind::Raw;
  std::vector<Scalar> params;      // a; (a, b); Clifford coefficients
  int n = 0, m = 0;                // matrix shape
  std::vector<RecipePtr> children; // inner algebra; tensor factors
  std::shared_ptr<const SuperAlgebra> raw;  // Raw leaves keep their constants

  std::string to_string() const;
};

struct Term {
  std::size_t index;
  Scalar coeff;
};

class Element;

class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  /// table[i * dim + j] lists the nonzero coordinates of e_i e_j. Throws
  /// InvalidAlgebra when associativity, the unit laws or grading fail.
  SuperAlgebra(const Field& f, std::vector<int> parity, std::vector<std::vector<Term>> table, Vec unit,
               RecipePtr recipe = nullptr);

  /// Dense constants c[(i * dim + j) * dim + k].
  static SuperAlgebra from_dense(const Field& f, std::vector<int> parity, const std::vector<Scalar>& c,
                                 Vec unit, RecipePtr recipe = nullptr);

  const Field& field() const { return impl_->field; }
  std::size_t dim() const { return impl_->parity.size(); }
  int parity(std::size_t i) const { return impl_->parity[i]; }
  const std::vector<int>& parities() const { return impl_->parity; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return impl_->table[i * dim() + j]; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  const Vec& unit() const { return impl_->unit; }
  const RecipePtr& recipe() const { return impl_->recipe; }
  std::uint64_t fingerprint() const { return impl_->fingerprint; }
  std::vector<std::size_t> indices_of_parity(int p) const;
  bool is_trivially_graded() const { return indices_of_parity(1).empty(); }

  /// Same structure constants, different recipe tag.
  SuperAlgebra with_recipe(RecipePtr recipe) const;

  Vec mul(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y and of y -> y x.
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
  std::optional<int> parity_of(const Vec& x) const;  // nullopt when inhomogeneous; 0 for zero
  Scalar trace_left(const Vec& x) const;               // Tr(L_x)

  Element element(Vec coords) const;
  Element basis(std::size_t i) const;
  Element one() const;
  Element zero() const;
  Element scalar(const Scalar& s) const;

  bool same_as(const SuperAlgebra& o) const { return impl_ == o.impl_ || fingerprint() == o.fingerprint(); }

 private:
  struct Impl {
    Field field;
    std::vector<int> parity;
    std::vector<std::vector<Term>> table;
    Vec unit;
    RecipePtr recipe;
    std::uint64_t fingerprint = 0;
  };
  std::shared_ptr<const Impl> impl_;
};

class Element {
 public:
  Element(SuperAlgebra parent, Vec coords);

  const SuperAlgebra& parent() const { return parent_; }
  const Vec& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return superalg::is_zero(coords_); }
  bool is_homogeneous() const { return parent_.parity_of(coords_).has_value(); }
  /// Parity of a homogeneous element; throws NotHomogeneous otherwise.
  int parity() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  friend Element operator*(const Scalar& s, const Element& x) { return Element(x.parent_, s * x.coords_); }
  bool operator==(const Element& o) const;

  std::string to_string() const;

 private:
  void check_parent(const Element& o) const;
  SuperAlgebra parent_;
  Vec coords_;
};

Element multiply(const Element& x, const Element& y);
/// Two-sided inverse of a homogeneous element, nullopt when singular.
std::optional<Element> invert_homogeneous(const Element& x);
/// Inverse of any element (no homogeneity requirement).
std::optional<Element> invert(const Element& x);
/// When x = s * 1 for a scalar s, returns s.
std::optional<Scalar> as_scalar(const Element& x);

// ---- structure ---------------------------------------------------------------

std::vector<Element> graded_center(const SuperAlgebra& a);
std::vector<Element> center(const SuperAlgebra& a);
std::vector<Element> center_even(const SuperAlgebra& a);
bool is_central(const SuperAlgebra& a);
/// Nondegeneracy of the trace form Tr(L_{xy}).
bool is_semisimple(const SuperAlgebra& a);
bool is_graded_simple(const SuperAlgebra& a);
bool is_division_superalgebra(const SuperAlgebra& a);

/// The even part as a trivially graded algebra; basis = even basis vectors of a.
SuperAlgebra even_subalgebra(const SuperAlgebra& a);

Element find_idempotent_for_minimal_ideal(const SuperAlgebra& a, const Element& x);

enum class CssType { TriviallyGraded, Odd, Even };
std::string to_string(CssType t);

struct ClassificationReport {
  bool is_central = false;
  bool is_graded_simple = false;
  CssType type = CssType::TriviallyGraded;
  std::optional<Scalar> a;  // z^2
  std::optional<Element> z;
  bool split = false;       // Even: a is a square
  std::vector<std::size_t> a0_summary;
};

ClassificationReport classify_css(const SuperAlgebra& a);

struct OddDecomposition {
  SuperAlgebra tensor;  // (A_0) tensor F<sqrt a>
  Matrix iso;           // columns: images in A of the tensor basis
};
OddDecomposition odd_decompose(const SuperAlgebra& a);

struct EvenSplit {
  Element e_plus;
  Element e_minus;
  std::size_t dim_plus = 0;
  std::size_t dim_minus = 0;
};
EvenSplit even_split_idempotents(const SuperAlgebra& a);

}  // namespace superalg
