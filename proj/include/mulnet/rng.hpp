// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace mulnet {

// All randomness flows through this wrapper so that streams are reproducible
// across platforms and standard-library versions. The engine is std::mt19937_64
// (fully specified by the standard); the real/integer mappings below are fixed
// here because the std distributions are not portable.

std::uint64_t split_mix64(std::uint64_t x);

/// Combines a base seed with string labels into a decorrelated child seed.
/// Used to give every (pair, target) trial its own deterministic streams.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::string_view> labels);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution: (u64 >> 11) * 2^-53.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    double v = lo + uniform01() * (hi - lo);
    if (v >= hi) v = hi - (hi - lo) * 0x1.0p-53;  // rounding guard at the open end
    return v;
  }

  /// Uniform index in [0, n) via the multiply-shift reduction (no modulo bias
  /// worth speaking of for the n used here, and no platform dependence).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mulnet
