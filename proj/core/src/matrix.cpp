#include "qcalc/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::determinant() const {
  if (!square()) throw DimensionMismatch("determinant: matrix is not square");
  Matrix lu = *this;
  const std::size_t n = rows_;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu(r, k)) > std::abs(lu(pivot, k))) pivot = r;
    }
    if (lu(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = lu(r, k) / lu(k, k);
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  return det;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw DimensionMismatch("Matrix::apply: matrix has " + std::to_string(cols_) +
                            " columns but vector has " + std::to_string(x.size()) +
                            " components");
  }
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

}  // namespace qcalc
