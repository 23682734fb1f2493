// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "kernels_internal.hpp"

#if defined(MULNET_WITH_NEON)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

// NEON (aarch64) variants, two doubles per vector. Same loop structure and
// operation order as the scalar reference, no FMA: bit-identical results.

namespace mulnet::kernels::neon {

void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t n, std::size_t p) {
  std::fill(out, out + m * p, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* a_row = a + i * n;
    double* out_row = out + i * p;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a_row[k];
      const double* b_row = b + k * p;
      const float64x2_t va = vdupq_n_f64(aik);
      std::size_t j = 0;
      for (; j + 2 <= p; j += 2) {
        float64x2_t acc = vld1q_f64(out_row + j);
        acc = vaddq_f64(acc, vmulq_f64(va, vld1q_f64(b_row + j)));
        vst1q_f64(out_row + j, acc);
      }
      for (; j < p; ++j) {
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
    std::size_t c = 0;
    for (; c + 2 <= cols; c += 2) {
      vst1q_f64(out_row + c, vaddq_f64(vld1q_f64(in_row + c), vld1q_f64(bias + c)));
    }
    for (; c < cols; ++c) {
      out_row[c] = in_row[c] + bias[c];
    }
  }
}

void elementwise_mul(const double* a, const double* b, double* out,
                     std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

void scale(const double* a, double c, double* out, std::size_t n) {
  const float64x2_t vc = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vc));
  }
  for (; i < n; ++i) {
    out[i] = a[i] * c;
  }
}

void column_sums(const double* in, double* out, std::size_t rows,
                 std::size_t cols) {
  std::fill(out, out + cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* in_row = in + r * cols;
    std::size_t c = 0;
    for (; c + 2 <= cols; c += 2) {
      vst1q_f64(out + c, vaddq_f64(vld1q_f64(out + c), vld1q_f64(in_row + c)));
    }
    for (; c < cols; ++c) {
      out[c] += in_row[c];
    }
  }
}

void adam_update(double* theta, double* m, double* v, const double* grad,
                 std::size_t n, const AdamParams& p) {
  const double one_minus_b1 = 1.0 - p.beta1;
  const double one_minus_b2 = 1.0 - p.beta2;
  const float64x2_t vb1 = vdupq_n_f64(p.beta1);
  const float64x2_t vb2 = vdupq_n_f64(p.beta2);
  const float64x2_t vomb1 = vdupq_n_f64(one_minus_b1);
  const float64x2_t vomb2 = vdupq_n_f64(one_minus_b2);
  const float64x2_t vbi1 = vdupq_n_f64(p.bias1_inv);
  const float64x2_t vbi2 = vdupq_n_f64(p.bias2_inv);
  const float64x2_t vlr = vdupq_n_f64(p.lr);
  const float64x2_t veps = vdupq_n_f64(p.eps);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t g = vld1q_f64(grad + i);
    const float64x2_t m_new =
        vaddq_f64(vmulq_f64(vb1, vld1q_f64(m + i)), vmulq_f64(vomb1, g));
    const float64x2_t v_new = vaddq_f64(vmulq_f64(vb2, vld1q_f64(v + i)),
                                        vmulq_f64(vomb2, vmulq_f64(g, g)));
    vst1q_f64(m + i, m_new);
    vst1q_f64(v + i, v_new);
    const float64x2_t m_hat = vmulq_f64(m_new, vbi1);
    const float64x2_t v_hat = vmulq_f64(v_new, vbi2);
    const float64x2_t denom = vaddq_f64(vsqrtq_f64(v_hat), veps);
    const float64x2_t step = vdivq_f64(vmulq_f64(vlr, m_hat), denom);
    vst1q_f64(theta + i, vsubq_f64(vld1q_f64(theta + i), step));
  }
  for (; i < n; ++i) {
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

}  // namespace mulnet::kernels::neon

#endif  // MULNET_WITH_NEON
