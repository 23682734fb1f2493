// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/rng.hpp"

namespace mulnet {

std::uint64_t split_mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::string_view> labels) {
  // FNV-1a over the labels (with a separator so {"ab","c"} != {"a","bc"}),
  // mixed with the base seed and finalized through split_mix64.
  std::uint64_t h = 0xcbf29ce484222325ull ^ split_mix64(base);
  for (std::string_view label : labels) {
    for (unsigned char ch : label) {
      h ^= ch;
      h *= 0x100000001b3ull;
    }
    h ^= 0x1f;
    h *= 0x100000001b3ull;
  }
  return split_mix64(h);
}

}  // namespace mulnet
