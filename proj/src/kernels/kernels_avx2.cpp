// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "kernels_internal.hpp"

#if defined(MULNET_WITH_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

// AVX2 variants of the scalar reference kernels. This file is compiled with
// -mavx2 and reached only after the runtime CPU check in the dispatcher.
// Accumulation order matches the scalar loops and FMA is deliberately not
// used, so results are bit-identical to kernels::generic.

namespace mulnet::kernels::avx2 {

void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t n, std::size_t p) {
  std::fill(out, out + m * p, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* a_row = a + i * n;
    double* out_row = out + i * p;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a_row[k];
      const double* b_row = b + k * p;
      const __m256d va = _mm256_set1_pd(aik);
      std::size_t j = 0;
      for (; j + 4 <= p; j += 4) {
        __m256d acc = _mm256_loadu_pd(out_row + j);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(va, _mm256_loadu_pd(b_row + j)));
        _mm256_storeu_pd(out_row + j, acc);
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
    for (; c + 4 <= cols; c += 4) {
      const __m256d v =
          _mm256_add_pd(_mm256_loadu_pd(in_row + c), _mm256_loadu_pd(bias + c));
      _mm256_storeu_pd(out_row + c, v);
    }
    for (; c < cols; ++c) {
      out_row[c] = in_row[c] + bias[c];
    }
  }
}

void elementwise_mul(const double* a, const double* b, double* out,
                     std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                            _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) {
    out[i] = a[i] * b[i];
  }
}

void scale(const double* a, double c, double* out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), vc));
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
    for (; c + 4 <= cols; c += 4) {
      const __m256d acc =
          _mm256_add_pd(_mm256_loadu_pd(out + c), _mm256_loadu_pd(in_row + c));
      _mm256_storeu_pd(out + c, acc);
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
  const __m256d vb1 = _mm256_set1_pd(p.beta1);
  const __m256d vb2 = _mm256_set1_pd(p.beta2);
  const __m256d vomb1 = _mm256_set1_pd(one_minus_b1);
  const __m256d vomb2 = _mm256_set1_pd(one_minus_b2);
  const __m256d vbi1 = _mm256_set1_pd(p.bias1_inv);
  const __m256d vbi2 = _mm256_set1_pd(p.bias2_inv);
  const __m256d vlr = _mm256_set1_pd(p.lr);
  const __m256d veps = _mm256_set1_pd(p.eps);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d g = _mm256_loadu_pd(grad + i);
    const __m256d m_new = _mm256_add_pd(_mm256_mul_pd(vb1, _mm256_loadu_pd(m + i)),
                                        _mm256_mul_pd(vomb1, g));
    const __m256d v_new =
        _mm256_add_pd(_mm256_mul_pd(vb2, _mm256_loadu_pd(v + i)),
                      _mm256_mul_pd(vomb2, _mm256_mul_pd(g, g)));
    _mm256_storeu_pd(m + i, m_new);
    _mm256_storeu_pd(v + i, v_new);
    const __m256d m_hat = _mm256_mul_pd(m_new, vbi1);
    const __m256d v_hat = _mm256_mul_pd(v_new, vbi2);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(v_hat), veps);
    const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, m_hat), denom);
    _mm256_storeu_pd(theta + i, _mm256_sub_pd(_mm256_loadu_pd(theta + i), step));
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

}  // namespace mulnet::kernels::avx2

#endif  // MULNET_WITH_AVX2
