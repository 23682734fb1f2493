// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <vector>

#include "mulnet/datagen.hpp"
#include "mulnet/network.hpp"

namespace mulnet {

struct TrainConfig {
  std::size_t epochs = 100;
  std::size_t batch_size = 32;
  double learning_rate = 0.001;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-7;
  std::uint64_t shuffle_seed = 0;
};

/// Throws ConfigError unless epochs >= 1, batch_size >= 1, and the rates lie
/// in (0, 1).
void validate(const TrainConfig& cfg);

/// First/second-moment accumulators mirroring parameter_list order.
struct AdamState {
  std::vector<Matrix> moment1;
  std::vector<Matrix> moment2;
  std::uint64_t step = 0;
};

AdamState make_adam_state(const Network& net);

/// Mean of |yhat_i - y_i| over column vectors of equal length.
double mae_loss(const Matrix& yhat, const Matrix& y);

/// Subgradient: sign(yhat_i - y_i)/m per entry; sign(0) = 0.
Matrix mae_grad(const Matrix& yhat, const Matrix& y);

/// One bias-corrected Adam update over every parameter tensor. Returns false
/// when any parameter became non-finite (diverged-trial signal).
bool adam_step(Network& net, const Gradients& grads, AdamState& state,
               const TrainConfig& cfg);

struct TrainResult {
  /// Per-epoch mean of batch losses; truncated at the epoch a divergence
  /// was detected.
  std::vector<double> epoch_losses;
  bool diverged = false;
};

/// Seeded-shuffle mini-batch loop: forward, MAE backward, Adam. Divergence is
/// recorded, never thrown.
TrainResult train(Network& net, const Dataset& data, const TrainConfig& cfg);

}  // namespace mulnet
