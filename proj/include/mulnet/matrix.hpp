// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mulnet/errors.hpp"

namespace mulnet {

/// Dense row-major matrix of doubles; the sole numeric container. Each data
/// sample is a row. Treated as immutable once an operation has produced it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeError("matrix data length does not match rows*cols");
    }
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  const double* data() const noexcept { return data_.data(); }
  double* data() noexcept { return data_.data(); }
  const std::vector<double>& values() const noexcept { return data_; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// Rows [first, last) as a new matrix; the only slicing the engine needs.
  Matrix row_range(std::size_t first, std::size_t last) const;

  bool all_finite() const noexcept {
    for (double v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add_row_broadcast(const Matrix& m, const Matrix& bias);  // bias: 1 x cols
Matrix transpose(const Matrix& m);
Matrix elementwise_mul(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double c);
Matrix column_sums(const Matrix& m);  // 1 x cols

/// Rows of `m` selected by index, in order (mini-batch gather).
Matrix gather_rows(const Matrix& m, std::span<const std::size_t> indices);

template <typename F>
Matrix elementwise_map(const Matrix& m, F&& f) {
  Matrix out(m.rows(), m.cols());
  const double* src = m.data();
  double* dst = out.data();
  for (std::size_t i = 0; i < m.size(); ++i) {
    dst[i] = f(src[i]);
  }
  return out;
}

}  // namespace mulnet
