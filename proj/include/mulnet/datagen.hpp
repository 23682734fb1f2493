// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mulnet/matrix.hpp"

namespace mulnet {

enum class TargetKind { kProduct, kComplex };

/// The synthetic regression targets: y = (prod_i x_i)/N, or the fixed
/// four-input arithmetic expression y = x1(x2+x3)+x4 (normalizer unused).
struct TargetFunction {
  TargetKind kind = TargetKind::kProduct;
  std::size_t n_inputs = 2;
  double normalizer = 1.0;

  static TargetFunction product(std::size_t n, double normalizer);
  static TargetFunction complex();

  /// Canonical form: "product:n=2,N=10" or "complex". Round-trips via parse.
  std::string to_string() const;
  static TargetFunction parse(std::string_view text);

  std::string kind_name() const {
    return kind == TargetKind::kProduct ? "product" : "complex";
  }
  /// Math-style label, e.g. "x1x2/10" or "x1(x2+x3)+x4".
  std::string expression() const;

  friend bool operator==(const TargetFunction&, const TargetFunction&) = default;
};

double target_value(const TargetFunction& target, std::span<const double> x);

struct DatasetMeta {
  double range_low = 0.0;
  double range_high = 0.0;
  TargetFunction target;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;
};

struct Dataset {
  Matrix X;  // samples x n_inputs
  Matrix y;  // samples x 1
  DatasetMeta meta;
};

/// X drawn i.i.d. uniform over [low, high) from the seeded stream, row by
/// row; y computed exactly from the target. Deterministic per seed.
Dataset generate(const TargetFunction& target, double low, double high,
                 std::size_t samples, std::uint64_t seed);

struct Histogram {
  std::vector<double> edges;        // bins + 1 edges over [min, max]
  std::vector<std::size_t> counts;  // sums to samples * n_inputs
};

/// Equal-width histogram of all pooled input entries.
Histogram histogram(const Dataset& data, std::size_t bins);

/// CSV with header x1,...,xn,y plus a "<path>.meta.json" sidecar.
void write_dataset_csv(const Dataset& data, const std::filesystem::path& path);
void write_histogram_csv(const Histogram& h, const std::filesystem::path& path);

/// Reads the CSV back; restores metadata from the sidecar when present.
Dataset load_dataset_csv(const std::filesystem::path& path);

}  // namespace mulnet
