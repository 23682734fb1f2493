// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"

namespace mulnet::kernels {

namespace {

const Backend kScalar{
    "scalar",          generic::matmul,      generic::add_row_broadcast,
    generic::elementwise_mul, generic::scale, generic::column_sums,
    generic::adam_update,
};

#if defined(MULNET_WITH_AVX2)
const Backend kAvx2{
    "avx2",         avx2::matmul,      avx2::add_row_broadcast,
    avx2::elementwise_mul, avx2::scale, avx2::column_sums,
    avx2::adam_update,
};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

#if defined(MULNET_WITH_NEON)
const Backend kNeon{
    "neon",         neon::matmul,      neon::add_row_broadcast,
    neon::elementwise_mul, neon::scale, neon::column_sums,
    neon::adam_update,
};
#endif

const Backend* select_backend() {
  const char* forced = std::getenv("MULNET_KERNELS");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) return &kScalar;
#if defined(MULNET_WITH_AVX2)
    if (std::strcmp(forced, "avx2") == 0 && cpu_has_avx2()) return &kAvx2;
#endif
#if defined(MULNET_WITH_NEON)
    if (std::strcmp(forced, "neon") == 0) return &kNeon;
#endif
    return &kScalar;  // unknown or unsupported request falls back
  }
#if defined(MULNET_WITH_AVX2)
  if (cpu_has_avx2()) return &kAvx2;
#endif
#if defined(MULNET_WITH_NEON)
  return &kNeon;  // baseline on aarch64
#endif
  return &kScalar;
}

}  // namespace

const Backend& active() {
  static const Backend* selected = select_backend();
  return *selected;
}

const Backend& scalar_backend() { return kScalar; }

std::vector<const Backend*> available_backends() {
  std::vector<const Backend*> list{&kScalar};
#if defined(MULNET_WITH_AVX2)
  if (cpu_has_avx2()) list.push_back(&kAvx2);
#endif
#if defined(MULNET_WITH_NEON)
  list.push_back(&kNeon);
#endif
  return list;
}

}  // namespace mulnet::kernels
