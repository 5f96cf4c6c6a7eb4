#pragma once

// Dense exact linear algebra over the supported fields.

#include <cstddef>
#include <optional>
#include <vector>

#include "superalg/fields.hpp"

namespace superalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Vec conj(const Vec& v);
/// Index of the first nonzero entry, or v.size().
std::size_t leading_index(const Vec& v);
/// Scales v so its first nonzero entry is 1.
Vec normalize_leading(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_identity() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix conj(const Matrix& m);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}; each vector has a 1 at its free column.
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
/// Indices of a maximal linearly independent subfamily, chosen greedily.
std::vector<std::size_t> independent_subset(const Field& f, const std::vector<Vec>& vs);

// Coordinates over the rational subfield of Q(sqrt d): entry k of a K-vector
// becomes entries 2k (rational part) and 2k+1 (sqrt part).
Field rational_subfield(const Field& k);
Vec realify(const Vec& v);
Vec complexify(const Field& k, const Vec& v);
/// Rational matrix of x -> m x (semilinear = false) or x -> m conj(x).
Matrix realify(const Matrix& m, bool semilinear);

}  // namespace superalg
