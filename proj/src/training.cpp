// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/training.hpp"

#include <cmath>
#include <numeric>

#include "mulnet/kernels.hpp"
#include "mulnet/rng.hpp"

namespace mulnet {

void validate(const TrainConfig& cfg) {
  if (cfg.epochs < 1) throw ConfigError("epochs must be >= 1");
  if (cfg.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  auto in_unit_interval = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_unit_interval(cfg.learning_rate) ||
      !in_unit_interval(cfg.adam_beta1) || !in_unit_interval(cfg.adam_beta2)) {
    throw ConfigError("learning_rate and betas must lie in (0,1)");
  }
  if (!(cfg.adam_epsilon > 0.0)) throw ConfigError("adam_epsilon must be > 0");
}

AdamState make_adam_state(const Network& net) {
  AdamState s;
  for (const Matrix* p : parameter_list(net)) {
    s.moment1.emplace_back(p->rows(), p->cols());
    s.moment2.emplace_back(p->rows(), p->cols());
  }
  return s;
}

double mae_loss(const Matrix& yhat, const Matrix& y) {
  if (yhat.rows() != y.rows() || yhat.cols() != 1 || y.cols() != 1 ||
      yhat.rows() < 1) {
    throw ShapeError("mae_loss: need equal-length column vectors");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < yhat.rows(); ++i) {
    sum += std::fabs(yhat(i, 0) - y(i, 0));
  }
  return sum / static_cast<double>(yhat.rows());
}

Matrix mae_grad(const Matrix& yhat, const Matrix& y) {
  if (yhat.rows() != y.rows() || yhat.cols() != 1 || y.cols() != 1 ||
      yhat.rows() < 1) {
    throw ShapeError("mae_grad: need equal-length column vectors");
  }
  const double inv_m = 1.0 / static_cast<double>(yhat.rows());
  Matrix g(yhat.rows(), 1);
  for (std::size_t i = 0; i < yhat.rows(); ++i) {
    const double r = yhat(i, 0) - y(i, 0);
    g(i, 0) = r > 0.0 ? inv_m : (r < 0.0 ? -inv_m : 0.0);
  }
  return g;
}

bool adam_step(Network& net, const Gradients& grads, AdamState& state,
               const TrainConfig& cfg) {
  state.step += 1;
  const double t = static_cast<double>(state.step);
  const kernels::AdamParams p{
      cfg.adam_beta1,
      cfg.adam_beta2,
      cfg.learning_rate,
      cfg.adam_epsilon,
      1.0 / (1.0 - std::pow(cfg.adam_beta1, t)),
      1.0 / (1.0 - std::pow(cfg.adam_beta2, t)),
  };
  auto params = parameter_list(net);
  auto gs = gradient_list(grads);
  bool finite = true;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Matrix& theta = *params[i];
    const Matrix& g = *gs[i];
    if (theta.rows() != g.rows() || theta.cols() != g.cols()) {
      throw ShapeError("adam_step: gradient shape mismatch");
    }
    kernels::active().adam_update(theta.data(), state.moment1[i].data(),
                                  state.moment2[i].data(), g.data(),
                                  theta.size(), p);
    finite = finite && theta.all_finite();
  }
  return finite;
}

TrainResult train(Network& net, const Dataset& data, const TrainConfig& cfg) {
  validate(cfg);
  if (data.X.cols() != net.spec.input_width) {
    throw ShapeError("train: dataset width mismatch");
  }
  if (data.y.rows() != data.X.rows() || data.y.cols() != 1) {
    throw ShapeError("train: target must be one column per sample");
  }

  const std::size_t n = data.X.rows();
  Rng shuffle_rng(cfg.shuffle_seed);
  AdamState state = make_adam_state(net);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  result.epoch_losses.reserve(cfg.epochs);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffle_rng.shuffle(order);
    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < n; start += cfg.batch_size) {
      const std::size_t stop = std::min(n, start + cfg.batch_size);
      const std::span<const std::size_t> idx{order.data() + start,
                                             stop - start};
      const Matrix xb = gather_rows(data.X, idx);
      const Matrix yb = gather_rows(data.y, idx);

      const ForwardTrace trace = forward(net, xb);
      if (!trace.finite) {
        result.diverged = true;
        return result;
      }
      const double loss = mae_loss(trace.yhat, yb);
      if (!std::isfinite(loss)) {
        result.diverged = true;
        return result;
      }
      loss_sum += loss;
      ++batches;

      const Gradients grads = backward(net, trace, mae_grad(trace.yhat, yb));
      if (!adam_step(net, grads, state, cfg)) {
        result.diverged = true;
        return result;
      }
    }
    result.epoch_losses.push_back(loss_sum / static_cast<double>(batches));
  }
  return result;
}

}  // namespace mulnet
