// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/matrix.hpp"

#include <string>

#include "mulnet/kernels.hpp"

namespace mulnet {

namespace {

std::string shape_str(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a) +
                     " vs " + shape_str(b));
  }
}

}  // namespace

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw ShapeError("from_rows: ragged initializer");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::row_range(std::size_t first, std::size_t last) const {
  if (first > last || last > rows_) {
    throw ShapeError("row_range: [" + std::to_string(first) + "," +
                     std::to_string(last) + ") out of " +
                     std::to_string(rows_) + " rows");
  }
  Matrix out(last - first, cols_);
  std::copy(data_.begin() + first * cols_, data_.begin() + last * cols_,
            out.data());
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + shape_str(a) + " by " + shape_str(b));
  }
  Matrix out(a.rows(), b.cols());
  kernels::active().matmul(a.data(), b.data(), out.data(), a.rows(), a.cols(),
                           b.cols());
  return out;
}

Matrix add_row_broadcast(const Matrix& m, const Matrix& bias) {
  if (bias.rows() != 1 || bias.cols() != m.cols()) {
    throw ShapeError("add_row_broadcast: bias " + shape_str(bias) +
                     " against " + shape_str(m));
  }
  Matrix out(m.rows(), m.cols());
  kernels::active().add_row_broadcast(m.data(), bias.data(), out.data(),
                                      m.rows(), m.cols());
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(c, r) = m(r, c);
    }
  }
  return out;
}

Matrix elementwise_mul(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "elementwise_mul");
  Matrix out(a.rows(), a.cols());
  kernels::active().elementwise_mul(a.data(), b.data(), out.data(), a.size());
  return out;
}

Matrix scale(const Matrix& m, double c) {
  Matrix out(m.rows(), m.cols());
  kernels::active().scale(m.data(), c, out.data(), m.size());
  return out;
}

Matrix column_sums(const Matrix& m) {
  Matrix out(1, m.cols());
  kernels::active().column_sums(m.data(), out.data(), m.rows(), m.cols());
  return out;
}

Matrix gather_rows(const Matrix& m, std::span<const std::size_t> indices) {
  Matrix out(indices.size(), m.cols());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= m.rows()) {
      throw ShapeError("gather_rows: index " + std::to_string(indices[i]) +
                       " out of " + std::to_string(m.rows()));
    }
    std::copy_n(m.data() + indices[i] * m.cols(), m.cols(),
                out.data() + i * m.cols());
  }
  return out;
}

}  // namespace mulnet
