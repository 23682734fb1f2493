// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>

namespace mulnet {

/// Incompatible matrix/vector dimensions.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown name (activation, target, ...).
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Invalid configuration value (range, sample count, rate, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A metric is mathematically undefined for the given inputs.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// File read/write failure; message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mulnet
