#pragma once

// Exact scalars over Q, Q(sqrt d) and GF(p), together with the number theory
// needed by the decision procedures: square classes, local Hilbert symbols
// over Q and norm equations for quadratic extensions.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superalg/error.hpp"

namespace superalg {

using Rational = mpq_class;
using Integer = mpz_class;

enum class FieldKind { Rationals, QuadraticRational, PrimeField };

/// Descriptor of one of the supported base fields. Values are validated on
/// construction: d must be squarefree and different from 0 and 1, p must be an
/// odd prime.
class Field {
 public:
  Field() = default;

  static Field rationals();
  static Field quadratic(std::int64_t d);
  static Field prime(std::int64_t p);

  FieldKind kind() const { return kind_; }
  std::int64_t d() const { return param_; }
  std::int64_t p() const { return param_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_quadratic() const { return kind_ == FieldKind::QuadraticRational; }
  bool is_prime() const { return kind_ == FieldKind::PrimeField; }

  /// "Q", "Q(sqrt(d))" or "GF(p)".
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::int64_t param_ = 0;
};

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const Field& f) : field_(f) {}
  Scalar(const Field& f, const Rational& x);
  Scalar(const Field& f, const Rational& x, const Rational& y);
  Scalar(const Field& f, long x) : Scalar(f, Rational(x)) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }
  /// sqrt(d) in Q(sqrt d).
  static Scalar generator(const Field& f);

  const Field& field() const { return field_; }
  /// Rational part (x in x + y sqrt d; the residue for GF(p)).
  const Rational& re() const { return re_; }
  /// Coefficient of sqrt(d); always zero outside Q(sqrt d).
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  /// True when the value lies in the prime subfield (Q or GF(p)).
  bool is_rational() const { return sgn(im_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && re_ == o.re_ && im_ == o.im_;
  }

  /// Canonical encodings: "n/d", "x+y*sqrt(d)" (x, y in n/d form) and "gf(p):r".
  std::string to_string() const;
  static Scalar parse(const Field& f, const std::string& text);

 private:
  void check_same(const Scalar& o) const;
  void reduce();

  Field field_;
  Rational re_ = 0;
  Rational im_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// x - y sqrt d. Throws NotAQuadraticExtension outside Q(sqrt d).
Scalar conj(const Scalar& c);
/// x^2 - d y^2, returned as an element of the same field with zero sqrt part.
Scalar norm(const Scalar& c);
Scalar trace(const Scalar& c);
/// Conjugation when the field is quadratic, identity otherwise.
Scalar conj_if_quadratic(const Scalar& c);

struct SquareClassResult {
  bool is_square = false;
  std::optional<Scalar> witness;
};

SquareClassResult is_square(const Scalar& c);
bool square_class_equal(const Scalar& a, const Scalar& b);

/// A canonical representative of the square class of c, when one exists:
/// the squarefree integer for Q and 1 or the least nonresidue for GF(p).
/// Returns nullopt over Q(sqrt d).
std::optional<Scalar> square_class_representative(const Scalar& c);

// ---- integers --------------------------------------------------------------

/// Prime factorization of |n| (n != 0). Trial division up to 10^6, Pollard rho
/// beyond; gives up with FactorizationTooHard on stubborn cofactors.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);
bool is_squarefree(const Integer& n);
bool is_prime(const Integer& n);

// ---- Hilbert symbols over Q ------------------------------------------------

struct Place {
  bool infinite = true;
  Integer prime = 0;

  static Place infinity() { return Place{}; }
  static Place at(const Integer& p) { return Place{false, p}; }
  std::string to_string() const;
  bool operator==(const Place& o) const { return infinite == o.infinite && prime == o.prime; }
};

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Infinity, 2, and every odd prime dividing numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// True iff the quaternion algebra (a, b)_Q is split.
bool quaternion_is_split(const Rational& a, const Rational& b);

// ---- norm equations --------------------------------------------------------

/// Default height bound for witness searches; SUPERALG_SEARCH_BOUND overrides.
long default_search_bound();

struct NormEquationResult {
  bool solvable = false;
  std::optional<Scalar> witness;  // lambda in Q(sqrt d) with N(lambda) = c
  bool witness_search_exhausted = false;
};

/// Decides whether c is a norm from Q(sqrt d) and, when possible, produces a
/// witness. Solvability is exact; the witness is found by Gaussian-integer
/// factorization for d = -1 and by a bounded search otherwise.
NormEquationResult norm_equation(std::int64_t d, const Rational& c,
                                 long search_bound = default_search_bound());

/// Square root modulo an odd prime (Tonelli-Shanks); nullopt for nonresidues.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

}  // namespace superalg
