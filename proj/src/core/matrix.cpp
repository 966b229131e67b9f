#include "rffmkl/core/matrix.hpp"

#include <cmath>
#include <cstdint>

#include "rffmkl/core/errors.hpp"

namespace rffmkl {

bool Matrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Matrix gram_serial(const Matrix& X) {
  const std::size_t n = X.rows();
  Matrix G(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = dot(X.row(i), X.row(j));
      G(i, j) = v;
      G(j, i) = v;
    }
  }
  return G;
}

Matrix gram(const Matrix& X) {
  const std::size_t n = X.rows();
  Matrix G(n, n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = i; j < n; ++j) {
      const double v = dot(X.row(i), X.row(j));
      G(i, j) = v;
      G(j, i) = v;
    }
  }
  return G;
}

std::vector<double> matvec_serial(const Matrix& X, std::span<const double> w) {
  if (w.size() != X.cols()) throw ShapeError("matvec: length mismatch");
  std::vector<double> y(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) y[i] = dot(X.row(i), w);
  return y;
}

std::vector<double> matvec(const Matrix& X, std::span<const double> w) {
  if (w.size() != X.cols()) throw ShapeError("matvec: length mismatch");
  std::vector<double> y(X.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(X.rows()); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    y[i] = dot(X.row(i), w);
  }
  return y;
}

}  // namespace rffmkl
