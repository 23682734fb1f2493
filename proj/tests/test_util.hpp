// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <cstddef>

#include "mulnet/matrix.hpp"
#include "mulnet/rng.hpp"

namespace mulnet::testing {

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                            double lo = -1.0, double hi = 1.0) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) {
    m.data()[i] = rng.uniform(lo, hi);
  }
  return m;
}

inline bool rel_close(double a, double b, double tol) {
  const double diff = std::fabs(a - b);
  const double mag = std::fmax(std::fabs(a), std::fabs(b));
  return diff <= tol * std::fmax(mag, 1e-30);
}

// Independent reference for matmul: the classic triple loop, accumulating in
// k order. Test-only; kept separate from the kernel backends on purpose.
inline Matrix naive_matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace mulnet::testing
