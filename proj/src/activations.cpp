// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/activations.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mulnet {

double symlog(double x) {
  return x >= 0.0 ? std::log1p(x) : -std::log1p(-x);
}

double symlog_deriv(double x) { return 1.0 / (1.0 + std::fabs(x)); }

double symexp(double x) {
  return x >= 0.0 ? std::expm1(x) : -std::expm1(-x);
}

double symexp_deriv(double x) { return std::exp(std::fabs(x)); }

namespace {

// SELU constants from Klambauer et al. (self-normalizing networks).
constexpr double kSeluAlpha = 1.6732632423543772;
constexpr double kSeluScale = 1.0507009873554805;

double sigmoid_value(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double sigmoid_deriv(double x) {
  const double s = sigmoid_value(x);
  return s * (1.0 - s);
}

double elu_value(double x) { return x >= 0.0 ? x : std::expm1(x); }
double elu_deriv(double x) { return x >= 0.0 ? 1.0 : std::exp(x); }

// Keras convention: clip(0.2x + 0.5, 0, 1); derivative 0 at and beyond the
// clip boundaries.
double hard_sigmoid_value(double x) {
  const double y = 0.2 * x + 0.5;
  return y < 0.0 ? 0.0 : (y > 1.0 ? 1.0 : y);
}
double hard_sigmoid_deriv(double x) {
  return (x > -2.5 && x < 2.5) ? 0.2 : 0.0;
}

double linear_value(double x) { return x; }
double linear_deriv(double) { return 1.0; }

double relu_value(double x) { return x > 0.0 ? x : 0.0; }
double relu_deriv(double x) { return x > 0.0 ? 1.0 : 0.0; }

double selu_value(double x) {
  return x >= 0.0 ? kSeluScale * x : kSeluScale * (kSeluAlpha * std::expm1(x));
}
double selu_deriv(double x) {
  return x >= 0.0 ? kSeluScale : kSeluScale * (kSeluAlpha * std::exp(x));
}

double softplus_value(double x) {
  return std::fmax(x, 0.0) + std::log1p(std::exp(-std::fabs(x)));
}
double softplus_deriv(double x) { return sigmoid_value(x); }

double softsign_value(double x) { return x / (1.0 + std::fabs(x)); }
double softsign_deriv(double x) {
  const double d = 1.0 + std::fabs(x);
  return 1.0 / (d * d);
}

double swish_value(double x) { return x * sigmoid_value(x); }
double swish_deriv(double x) {
  const double s = sigmoid_value(x);
  return s + x * s * (1.0 - s);
}

double tanh_value(double x) { return std::tanh(x); }
double tanh_deriv(double x) {
  const double t = std::tanh(x);
  return 1.0 - t * t;
}

constexpr std::array<double, 1> kSeamAtZero{0.0};
constexpr std::array<double, 2> kHardSigmoidSeams{-2.5, 2.5};

const std::array<Activation, 13> kRegistry{{
    {"elu", elu_value, elu_deriv, false, kSeamAtZero},
    {"hard_sigmoid", hard_sigmoid_value, hard_sigmoid_deriv, false,
     kHardSigmoidSeams},
    {"linear", linear_value, linear_deriv, false, {}},
    {"relu", relu_value, relu_deriv, false, kSeamAtZero},
    {"selu", selu_value, selu_deriv, false, kSeamAtZero},
    {"sigmoid", sigmoid_value, sigmoid_deriv, false, {}},
    {"softmax", nullptr, nullptr, true, {}},
    {"softplus", softplus_value, softplus_deriv, false, {}},
    {"softsign", softsign_value, softsign_deriv, false, kSeamAtZero},
    {"swish", swish_value, swish_deriv, false, {}},
    {"tanh", tanh_value, tanh_deriv, false, {}},
    {"symlog", symlog, symlog_deriv, false, kSeamAtZero},
    {"symexp", symexp, symexp_deriv, false, kSeamAtZero},
}};

constexpr std::array<std::string_view, 11> kBaselineNames{
    "elu",     "hard_sigmoid", "linear",   "relu",  "selu", "sigmoid",
    "softmax", "softplus",     "softsign", "swish", "tanh"};

// z and out are rows of length n: out = softmax(z), max-shifted for stability.
void softmax_row(const double* z, double* out, std::size_t n) {
  double zmax = z[0];
  for (std::size_t i = 1; i < n; ++i) zmax = std::fmax(zmax, z[i]);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(z[i] - zmax);
    sum += out[i];
  }
  for (std::size_t i = 0; i < n; ++i) out[i] /= sum;
}

}  // namespace

const Activation& activation_by_name(std::string_view name) {
  for (const Activation& a : kRegistry) {
    if (a.name == name) return a;
  }
  throw LookupError("unknown activation: " + std::string(name));
}

std::span<const Activation> all_activations() { return kRegistry; }

std::span<const std::string_view> baseline_activation_names() {
  return kBaselineNames;
}

Matrix apply_activation(const Activation& a, const Matrix& z) {
  if (!a.vector_valued) {
    return elementwise_map(z, a.value);
  }
  Matrix out(z.rows(), z.cols());
  for (std::size_t r = 0; r < z.rows(); ++r) {
    softmax_row(z.data() + r * z.cols(), out.data() + r * z.cols(), z.cols());
  }
  return out;
}

Matrix activation_jacobian_apply(const Activation& a, const Matrix& z,
                                 const Matrix& upstream) {
  if (z.rows() != upstream.rows() || z.cols() != upstream.cols()) {
    throw ShapeError("activation_jacobian_apply: upstream shape mismatch");
  }
  if (!a.vector_valued) {
    return elementwise_mul(upstream, elementwise_map(z, a.deriv));
  }
  // Softmax rows: J = diag(s) - s s^T, so u^T J = s (.) (u - <u, s>).
  Matrix out(z.rows(), z.cols());
  const std::size_t n = z.cols();
  std::vector<double> s(n);
  for (std::size_t r = 0; r < z.rows(); ++r) {
    softmax_row(z.data() + r * n, s.data(), n);
    const double* u = upstream.data() + r * n;
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += u[i] * s[i];
    double* o = out.data() + r * n;
    for (std::size_t i = 0; i < n; ++i) o[i] = s[i] * (u[i] - dot);
  }
  return out;
}

}  // namespace mulnet
