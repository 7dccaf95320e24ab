#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "multiarr/scalar.hpp"

namespace multiarr {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  /// Builds from explicit rows; every entry must belong to `field`.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends the rows of `other` (same column count and field).
  void append_rows(const Matrix& other);

  Vector apply(std::span<const Scalar> v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Basis of the right null space. Vectors come one per free column in
/// ascending column order (first nonzero pivot per column during elimination),
/// each scaled so its first nonzero entry is 1.
std::vector<Vector> kernel_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace multiarr
