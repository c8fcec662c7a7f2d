#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcla/rational.hpp"

namespace tcla {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators; the product of those
/// scales is divided out at the end. The 0x0 determinant is 1.
Rat determinant(const Matrix& m);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of { c : c^T m = 0 } (row dependencies), in reduced form.
std::vector<std::vector<Rat>> left_kernel(const Matrix& m);

}  // namespace tcla
