// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "mulnet/activations.hpp"
#include "mulnet/matrix.hpp"

namespace mulnet {

/// Architecture of the shallow regressor:
/// input -> dense+A1 -> dense+A2 -> dense(linear) -> scalar output.
/// Default widths: 6 first-layer units cover up to four input selectors; 3
/// second-layer units cover the widest target (three additive product terms).
/// Slimmer second layers converge measurably faster on the product targets
/// than wider ones at the same step budget.
struct NetworkSpec {
  std::size_t input_width = 2;
  std::size_t hidden1_width = 6;
  std::size_t hidden2_width = 3;
  std::string a1 = "symlog";
  std::string a2 = "symexp";
  std::uint64_t init_seed = 0;
};

struct Network {
  NetworkSpec spec;
  Matrix w1, b1;  // input_width x h1, 1 x h1
  Matrix w2, b2;  // h1 x h2,          1 x h2
  Matrix w3, b3;  // h2 x 1,           1 x 1
};

/// Per-batch forward cache for backpropagation.
struct ForwardTrace {
  Matrix x;
  Matrix z1, h1;
  Matrix z2, h2;
  Matrix yhat;
  bool finite = true;  // false -> diverged-trial signal
};

struct Gradients {
  Matrix dw1, db1, dw2, db2, dw3, db3;
};

/// Glorot-uniform weights (limit sqrt(6/(fan_in+fan_out))) drawn from the
/// seeded stream in W1, W2, W3 order; zero biases. Deterministic per seed.
Network init_network(const NetworkSpec& spec);

ForwardTrace forward(const Network& net, const Matrix& x);

/// Exact analytic gradients for the batch cached in `trace`; bias gradients
/// are column sums of the layer deltas.
Gradients backward(const Network& net, const ForwardTrace& trace,
                   const Matrix& dl_dyhat);

std::array<Matrix*, 6> parameter_list(Network& net);
std::array<const Matrix*, 6> parameter_list(const Network& net);
std::array<const Matrix*, 6> gradient_list(const Gradients& g);

void save_network(const Network& net, const std::filesystem::path& path);
Network load_network(const std::filesystem::path& path);

}  // namespace mulnet
