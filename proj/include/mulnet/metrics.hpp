// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>

#include "mulnet/datagen.hpp"
#include "mulnet/network.hpp"

namespace mulnet {

struct EvalReport {
  std::string a1;
  std::string a2;
  std::string target;
  double test_mae = 0.0;
  double test_pct_err = 0.0;  // percent
  bool diverged = false;
};

/// Mean percentage error: (100/n) * sum_i |pred_i - actual_i| / |actual_i|.
/// Throws UndefinedMetricError if any actual entry is zero.
double percent_error(const Matrix& pred, const Matrix& actual);

/// One full-batch forward pass over the test set; non-finite predictions set
/// the diverged flag and +inf metrics.
EvalReport evaluate(const Network& net, const Dataset& test);

}  // namespace mulnet
