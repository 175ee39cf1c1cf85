#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmod/scalars.hpp"

namespace pmod {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over a single field. Zero-sized shapes are valid.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, std::span<const Vector> columns);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// In-place reduced row echelon form with first-nonzero pivoting; returns the
/// pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

/// A solution of m x = rhs with free variables set to zero, if one exists.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs);

/// Basis of the linear forms vanishing on span(vectors) inside k^dim.
std::vector<Vector> annihilator(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors);

/// Selects, in order, the vectors of `candidates` that extend span(base).
std::vector<std::size_t> complement_indices(const FieldSpec& field, std::size_t dim, std::span<const Vector> base,
                                            std::span<const Vector> candidates);

}  // namespace pmod
