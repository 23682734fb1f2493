// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "mulnet/kernels.hpp"

// Per-backend entry points. Only the dispatcher and the kernel TUs see these;
// the rest of the project goes through kernels::active().

namespace mulnet::kernels::generic {
void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t n, std::size_t p);
void add_row_broadcast(const double* in, const double* bias, double* out,
                       std::size_t rows, std::size_t cols);
void elementwise_mul(const double* a, const double* b, double* out,
                     std::size_t n);
void scale(const double* a, double c, double* out, std::size_t n);
void column_sums(const double* in, double* out, std::size_t rows,
                 std::size_t cols);
void adam_update(double* theta, double* m, double* v, const double* grad,
                 std::size_t n, const AdamParams& p);
}  // namespace mulnet::kernels::generic

#if defined(MULNET_WITH_AVX2)
namespace mulnet::kernels::avx2 {
void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t n, std::size_t p);
void add_row_broadcast(const double* in, const double* bias, double* out,
                       std::size_t rows, std::size_t cols);
void elementwise_mul(const double* a, const double* b, double* out,
                     std::size_t n);
void scale(const double* a, double c, double* out, std::size_t n);
void column_sums(const double* in, double* out, std::size_t rows,
                 std::size_t cols);
void adam_update(double* theta, double* m, double* v, const double* grad,
                 std::size_t n, const AdamParams& p);
}  // namespace mulnet::kernels::avx2
#endif

#if defined(MULNET_WITH_NEON)
namespace mulnet::kernels::neon {
void matmul(const double* a, const double* b, double* out, std::size_t m,
            std::size_t n, std::size_t p);
void add_row_broadcast(const double* in, const double* bias, double* out,
                       std::size_t rows, std::size_t cols);
void elementwise_mul(const double* a, const double* b, double* out,
                     std::size_t n);
void scale(const double* a, double c, double* out, std::size_t n);
void column_sums(const double* in, double* out, std::size_t rows,
                 std::size_t cols);
void adam_update(double* theta, double* m, double* v, const double* grad,
                 std::size_t n, const AdamParams& p);
}  // namespace mulnet::kernels::neon
#endif
