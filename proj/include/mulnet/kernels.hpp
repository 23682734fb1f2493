// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstddef>
#include <vector>

namespace mulnet::kernels {

// Scalars of one Adam update step, shared by every parameter tensor.
struct AdamParams {
  double beta1;
  double beta2;
  double lr;
  double eps;
  double bias1_inv;  // 1 / (1 - beta1^t)
  double bias2_inv;  // 1 / (1 - beta2^t)
};

// One implementation of the data-parallel inner loops. Every backend computes
// bit-identical results: the SIMD variants keep the scalar reference's
// per-element operation order and use no FMA, so runtime dispatch never
// changes numerics.
struct Backend {
  const char* name;

  // out[m x p] = a[m x n] . b[n x p], row-major, out does not alias inputs.
  void (*matmul)(const double* a, const double* b, double* out, std::size_t m,
                 std::size_t n, std::size_t p);
  // out[r][c] = in[r][c] + bias[c]
  void (*add_row_broadcast)(const double* in, const double* bias, double* out,
                            std::size_t rows, std::size_t cols);
  void (*elementwise_mul)(const double* a, const double* b, double* out,
                          std::size_t n);
  void (*scale)(const double* a, double c, double* out, std::size_t n);
  // out[c] = sum_r in[r][c]
  void (*column_sums)(const double* in, double* out, std::size_t rows,
                      std::size_t cols);
  // Bias-corrected Adam: m,v updated in place, theta -= lr*mhat/(sqrt(vhat)+eps).
  void (*adam_update)(double* theta, double* m, double* v, const double* grad,
                      std::size_t n, const AdamParams& p);
};

/// Backend selected once per process: best supported by the CPU, overridable
/// with MULNET_KERNELS=scalar|avx2|neon.
const Backend& active();

/// The scalar reference implementation (always present).
const Backend& scalar_backend();

/// Every backend usable on this CPU, scalar first. Equivalence tests iterate
/// this list and require bitwise agreement with the scalar reference.
std::vector<const Backend*> available_backends();

}  // namespace mulnet::kernels
