#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lietrip/field.hpp"

namespace lietrip {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec f, std::size_t n);
Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i);
Vector vector_from_ints(FieldSpec f, std::initializer_list<long> values);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

/// Dense matrix over a single field, row-major.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Entry-wise vector of the matrix in row-major order.
  Vector flatten() const;
  static Matrix unflatten(FieldSpec field, std::size_t rows, std::size_t cols, const Vector& v);

  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

/// Stack blocks vertically (same column count).
Matrix vstack(const std::vector<Matrix>& blocks);
/// Stack blocks horizontally (same row count).
Matrix hstack(const std::vector<Matrix>& blocks);

}  // namespace lietrip
