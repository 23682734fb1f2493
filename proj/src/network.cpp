// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/network.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mulnet/rng.hpp"

namespace mulnet {

namespace {

Matrix glorot_uniform(std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  const double limit =
      std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  Matrix w(fan_in, fan_out);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w.data()[i] = rng.uniform(-limit, limit);
  }
  return w;
}

void check_spec(const NetworkSpec& spec) {
  if (spec.input_width < 1 || spec.hidden1_width < 1 ||
      spec.hidden2_width < 1) {
    throw ConfigError("network widths must be >= 1");
  }
  // Raises LookupError on unknown names.
  activation_by_name(spec.a1);
  activation_by_name(spec.a2);
}

}  // namespace

Network init_network(const NetworkSpec& spec) {
  check_spec(spec);
  Rng rng(spec.init_seed);
  Network net;
  net.spec = spec;
  net.w1 = glorot_uniform(spec.input_width, spec.hidden1_width, rng);
  net.w2 = glorot_uniform(spec.hidden1_width, spec.hidden2_width, rng);
  net.w3 = glorot_uniform(spec.hidden2_width, 1, rng);
  net.b1 = Matrix(1, spec.hidden1_width);
  net.b2 = Matrix(1, spec.hidden2_width);
  net.b3 = Matrix(1, 1);
  return net;
}

ForwardTrace forward(const Network& net, const Matrix& x) {
  if (x.cols() != net.spec.input_width) {
    throw ShapeError("forward: input width " + std::to_string(x.cols()) +
                     " != " + std::to_string(net.spec.input_width));
  }
  const Activation& a1 = activation_by_name(net.spec.a1);
  const Activation& a2 = activation_by_name(net.spec.a2);

  ForwardTrace t;
  t.x = x;
  t.z1 = add_row_broadcast(matmul(x, net.w1), net.b1);
  t.h1 = apply_activation(a1, t.z1);
  t.z2 = add_row_broadcast(matmul(t.h1, net.w2), net.b2);
  t.h2 = apply_activation(a2, t.z2);
  t.yhat = add_row_broadcast(matmul(t.h2, net.w3), net.b3);
  t.finite = t.z1.all_finite() && t.h1.all_finite() && t.z2.all_finite() &&
             t.h2.all_finite() && t.yhat.all_finite();
  return t;
}

Gradients backward(const Network& net, const ForwardTrace& trace,
                   const Matrix& dl_dyhat) {
  if (dl_dyhat.rows() != trace.yhat.rows() ||
      dl_dyhat.cols() != trace.yhat.cols()) {
    throw ShapeError("backward: dl_dyhat shape mismatch");
  }
  const Activation& a1 = activation_by_name(net.spec.a1);
  const Activation& a2 = activation_by_name(net.spec.a2);

  Gradients g;
  const Matrix& delta3 = dl_dyhat;  // linear output layer
  g.dw3 = matmul(transpose(trace.h2), delta3);
  g.db3 = column_sums(delta3);

  const Matrix up2 = matmul(delta3, transpose(net.w3));
  const Matrix delta2 = activation_jacobian_apply(a2, trace.z2, up2);
  g.dw2 = matmul(transpose(trace.h1), delta2);
  g.db2 = column_sums(delta2);

  const Matrix up1 = matmul(delta2, transpose(net.w2));
  const Matrix delta1 = activation_jacobian_apply(a1, trace.z1, up1);
  g.dw1 = matmul(transpose(trace.x), delta1);
  g.db1 = column_sums(delta1);
  return g;
}

std::array<Matrix*, 6> parameter_list(Network& net) {
  return {&net.w1, &net.b1, &net.w2, &net.b2, &net.w3, &net.b3};
}

std::array<const Matrix*, 6> parameter_list(const Network& net) {
  return {&net.w1, &net.b1, &net.w2, &net.b2, &net.w3, &net.b3};
}

std::array<const Matrix*, 6> gradient_list(const Gradients& g) {
  return {&g.dw1, &g.db1, &g.dw2, &g.db2, &g.dw3, &g.db3};
}

void save_network(const Network& net, const std::filesystem::path& path) {
  nlohmann::json j;
  j["spec"] = {{"input_width", net.spec.input_width},
               {"hidden1_width", net.spec.hidden1_width},
               {"hidden2_width", net.spec.hidden2_width},
               {"a1", net.spec.a1},
               {"a2", net.spec.a2},
               {"init_seed", net.spec.init_seed}};
  j["params"] = {{"w1", net.w1.values()}, {"b1", net.b1.values()},
                 {"w2", net.w2.values()}, {"b2", net.b2.values()},
                 {"w3", net.w3.values()}, {"b3", net.b3.values()}};
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  nlohmann::json j = nlohmann::json::parse(in);
  NetworkSpec spec;
  const auto& js = j.at("spec");
  spec.input_width = js.at("input_width").get<std::size_t>();
  spec.hidden1_width = js.at("hidden1_width").get<std::size_t>();
  spec.hidden2_width = js.at("hidden2_width").get<std::size_t>();
  spec.a1 = js.at("a1").get<std::string>();
  spec.a2 = js.at("a2").get<std::string>();
  spec.init_seed = js.at("init_seed").get<std::uint64_t>();
  check_spec(spec);

  const auto& jp = j.at("params");
  auto tensor = [&](const char* key, std::size_t rows, std::size_t cols) {
    auto data = jp.at(key).get<std::vector<double>>();
    if (data.size() != rows * cols) {
      throw IoError(path.string() + ": parameter " + key + " has " +
                    std::to_string(data.size()) + " values, expected " +
                    std::to_string(rows * cols));
    }
    return Matrix(rows, cols, std::move(data));
  };
  Network net;
  net.spec = spec;
  net.w1 = tensor("w1", spec.input_width, spec.hidden1_width);
  net.b1 = tensor("b1", 1, spec.hidden1_width);
  net.w2 = tensor("w2", spec.hidden1_width, spec.hidden2_width);
  net.b2 = tensor("b2", 1, spec.hidden2_width);
  net.w3 = tensor("w3", spec.hidden2_width, 1);
  net.b3 = tensor("b3", 1, 1);
  return net;
}

}  // namespace mulnet
