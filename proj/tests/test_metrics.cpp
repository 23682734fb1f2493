// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <cmath>

#include "mulnet/metrics.hpp"
#include "test_util.hpp"

using namespace mulnet;
using mulnet::testing::random_matrix;

namespace {

Network product_oracle_net() {
  Network net;
  net.spec = {2, 2, 1, "symlog", "symexp", 0};
  net.w1 = Matrix::from_rows({{1, 0}, {0, 1}});
  net.b1 = Matrix(1, 2);
  net.w2 = Matrix::from_rows({{1}, {1}});
  net.b2 = Matrix(1, 1);
  net.w3 = Matrix::from_rows({{1}});
  net.b3 = Matrix(1, 1);
  return net;
}

}  // namespace

TEST_CASE("percent_error point cases") {
  const Matrix a = Matrix::from_rows({{100.0}, {200.0}});
  CHECK(percent_error(a, a) == 0.0);

  CHECK(percent_error(Matrix::from_rows({{110.0}}),
                      Matrix::from_rows({{100.0}})) == doctest::Approx(10.0));

  CHECK(percent_error(Matrix::from_rows({{90.0}, {220.0}}),
                      Matrix::from_rows({{100.0}, {200.0}})) ==
        doctest::Approx(10.0));
}

TEST_CASE("percent_error error paths") {
  CHECK_THROWS_AS(percent_error(Matrix::from_rows({{1.0}}),
                                Matrix::from_rows({{0.0}})),
                  UndefinedMetricError);
  CHECK_THROWS_AS(percent_error(Matrix(2, 1), Matrix(3, 1)), ShapeError);
}

TEST_CASE("percent_error is scale-invariant under power-of-two scaling") {
  Rng rng(401);
  const Matrix pred = random_matrix(32, 1, rng, 1.0, 50.0);
  const Matrix actual = random_matrix(32, 1, rng, 1.0, 50.0);
  const double base = percent_error(pred, actual);
  for (double c : {0.25, 2.0, 1024.0}) {
    CHECK(percent_error(scale(pred, c), scale(actual, c)) == base);
  }
}

TEST_CASE("percent_error is zero exactly when predictions match") {
  Rng rng(409);
  const Matrix actual = random_matrix(16, 1, rng, 1.0, 10.0);
  Matrix pred = actual;
  CHECK(percent_error(pred, actual) == 0.0);
  pred(7, 0) += 1e-9;
  CHECK(percent_error(pred, actual) > 0.0);
}

TEST_CASE("evaluate reports zero error for an exact predictor") {
  // Forge the targets to equal the network's own outputs.
  const TargetFunction t = TargetFunction::product(2, 10.0);
  Dataset test = generate(t, 100.0, 1000.0, 128, 77);
  Network net = product_oracle_net();
  test.y = forward(net, test.X).yhat;
  const EvalReport r = evaluate(net, test);
  CHECK(r.test_mae == 0.0);
  CHECK(r.test_pct_err == 0.0);
  CHECK(!r.diverged);
  CHECK(r.a1 == "symlog");
  CHECK(r.a2 == "symexp");
  CHECK(r.target == "product:n=2,N=10");
}

TEST_CASE("hand-set net extrapolates the product within a few percent") {
  // yhat = (x1+1)(x2+1)-1 overshoots x1*x2 by exactly x1+x2, so the percent
  // error over [100,1000)^2 must equal mean((x1+x2)/(x1*x2))*100 and stay
  // well under 25.
  const TargetFunction t = TargetFunction::product(2, 1.0);
  const Dataset test = generate(t, 100.0, 1000.0, 2000, 91);
  const Network net = product_oracle_net();
  const EvalReport r = evaluate(net, test);

  double expected = 0.0;
  for (std::size_t i = 0; i < test.X.rows(); ++i) {
    const double x1 = test.X(i, 0);
    const double x2 = test.X(i, 1);
    expected += (x1 + x2) / (x1 * x2);
  }
  expected *= 100.0 / static_cast<double>(test.X.rows());

  CHECK(r.test_pct_err == doctest::Approx(expected).epsilon(1e-9));
  CHECK(r.test_pct_err <= 25.0);
}

TEST_CASE("evaluate flags non-finite predictions as diverged") {
  const TargetFunction t = TargetFunction::product(2, 1.0);
  const Dataset test = generate(t, 100.0, 1000.0, 16, 13);
  Network net = product_oracle_net();
  net.w2 = Matrix::from_rows({{400.0}, {400.0}});  // symexp overflow
  const EvalReport r = evaluate(net, test);
  CHECK(r.diverged);
  CHECK(std::isinf(r.test_mae));
  CHECK(std::isinf(r.test_pct_err));
}

TEST_CASE("evaluate is deterministic") {
  const TargetFunction t = TargetFunction::product(2, 1.0);
  const Dataset test = generate(t, 100.0, 1000.0, 64, 15);
  const Network net = product_oracle_net();
  const EvalReport a = evaluate(net, test);
  const EvalReport b = evaluate(net, test);
  CHECK(a.test_mae == b.test_mae);
  CHECK(a.test_pct_err == b.test_pct_err);
}
