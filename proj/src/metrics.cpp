// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/metrics.hpp"

#include <cmath>
#include <limits>

#include "mulnet/training.hpp"

namespace mulnet {

double percent_error(const Matrix& pred, const Matrix& actual) {
  if (pred.rows() != actual.rows() || pred.cols() != 1 || actual.cols() != 1 ||
      pred.rows() < 1) {
    throw ShapeError("percent_error: need equal-length column vectors");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.rows(); ++i) {
    const double a = actual(i, 0);
    if (a == 0.0) {
      throw UndefinedMetricError("percent_error: zero actual value");
    }
    sum += std::fabs(pred(i, 0) - a) / std::fabs(a);
  }
  return 100.0 * sum / static_cast<double>(pred.rows());
}

EvalReport evaluate(const Network& net, const Dataset& test) {
  EvalReport report;
  report.a1 = net.spec.a1;
  report.a2 = net.spec.a2;
  report.target = test.meta.target.to_string();

  const ForwardTrace trace = forward(net, test.X);
  if (!trace.yhat.all_finite()) {
    report.diverged = true;
    report.test_mae = std::numeric_limits<double>::infinity();
    report.test_pct_err = std::numeric_limits<double>::infinity();
    return report;
  }
  report.test_mae = mae_loss(trace.yhat, test.y);
  report.test_pct_err = percent_error(trace.yhat, test.y);
  return report;
}

}  // namespace mulnet
