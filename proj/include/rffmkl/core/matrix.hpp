#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rffmkl {

// Dense row-major matrix of doubles. Deliberately minimal: the numeric
// kernels in this project are explicit loops (see gram/transform), so the
// container only needs contiguous storage and row views.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);

// Gram matrix G[i][j] = <row i, row j>. The OpenMP version parallelizes over
// rows of the upper triangle; every entry is an independent dot product, so
// the result is bit-identical to gram_serial.
Matrix gram(const Matrix& X);
Matrix gram_serial(const Matrix& X);

// y = X * w  (parallel over rows, bit-identical to the serial loop).
std::vector<double> matvec(const Matrix& X, std::span<const double> w);
std::vector<double> matvec_serial(const Matrix& X, std::span<const double> w);

}  // namespace rffmkl
