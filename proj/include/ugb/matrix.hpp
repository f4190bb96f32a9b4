#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ugb/exactnum.hpp"

namespace ugb {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);
Scalar determinant(Matrix m);

/// Solves m * x = b for square nonsingular m, one solution column per
/// column of b. Returns nullopt when m is singular.
std::optional<Matrix> solve(Matrix m, Matrix b);

}  // namespace ugb
