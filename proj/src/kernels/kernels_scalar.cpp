// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <cmath>

#include "kernels_internal.hpp"

// Scalar reference kernels. The SIMD backends mirror these loops exactly:
// same per-element operation order, mul+add only (no FMA), so every backend
// produces bit-identical output.

namespace mulnet::kernels::generic {

void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t n, std::size_t p) {
  std::fill(out, out + m * p, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* a_row = a + i * n;
    double* out_row = out + i * p;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a_row[k];
      const double* b_row = b + k * p;
      for (std::size_t j = 0; j < p; ++j) {
        out_row[j] += aik * b_row[j];
      }
    }
  }
}

void add_row_broadcast(const double* in, const double* bias, double* out,
                       std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* in_row = in + r * cols;
    double* out_row = out + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      out_row[c] = in_row[c] + bias[c];
    }
  }
}

void elementwise_mul(const double* a, const double* b, double* out,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

void scale(const double* a, double c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a[i] * c;
  }
}

void column_sums(const double* in, double* out, std::size_t rows,
                 std::size_t cols) {
  std::fill(out, out + cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* in_row = in + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      out[c] += in_row[c];
    }
  }
}

void adam_update(double* theta, double* m, double* v, const double* grad,
                 std::size_t n, const AdamParams& p) {
  const double one_minus_b1 = 1.0 - p.beta1;
  const double one_minus_b2 = 1.0 - p.beta2;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = grad[i];
    const double m_new = p.beta1 * m[i] + one_minus_b1 * g;
    const double v_new = p.beta2 * v[i] + one_minus_b2 * (g * g);
    m[i] = m_new;
    v[i] = v_new;
    const double m_hat = m_new * p.bias1_inv;
    const double v_hat = v_new * p.bias2_inv;
    theta[i] = theta[i] - (p.lr * m_hat) / (std::sqrt(v_hat) + p.eps);
  }
}

}  // namespace mulnet::kernels::generic
