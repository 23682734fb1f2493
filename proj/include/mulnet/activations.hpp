// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <span>
#include <string_view>

#include "mulnet/matrix.hpp"

namespace mulnet {

// The symmetric log/exp unit pair. Both are odd, continuous, strictly
// increasing, differentiable everywhere (one-sided derivatives at 0 agree),
// and exact inverses of each other.

/// log(x+1) for x >= 0, -log(1-x) for x < 0.
double symlog(double x);
/// d/dx symlog = 1/(1+|x|); equals 1 at x = 0.
double symlog_deriv(double x);
/// e^x - 1 for x >= 0, -e^(-x) + 1 for x < 0. Overflows to +/-inf past
/// |x| ~ 709; callers treat non-finite values as a diverged trial, never a crash.
double symexp(double x);
/// d/dx symexp = e^|x|; equals 1 at x = 0.
double symexp_deriv(double x);

/// A named scalar activation with exact first derivative. softmax is the one
/// vector-valued entry: value/deriv are null and application goes through the
/// per-row softmax path in apply_activation / activation_jacobian_apply.
struct Activation {
  std::string_view name;
  double (*value)(double);
  double (*deriv)(double);
  bool vector_valued;
  /// Kink locations where the derivative is defined by convention; derivative
  /// tests keep finite-difference probes away from these.
  std::span<const double> seams;
};

/// Lookup by canonical lowercase name; throws LookupError for unknown names.
/// Baselines: elu, hard_sigmoid, linear, relu, selu, sigmoid, softmax,
/// softplus, softsign, swish, tanh. Plus the proposed units: symlog, symexp.
const Activation& activation_by_name(std::string_view name);

/// All 13 registered activations.
std::span<const Activation> all_activations();

/// The 11 baseline names, in registry order.
std::span<const std::string_view> baseline_activation_names();

/// Elementwise value (per-row softmax for the vector-valued entry).
Matrix apply_activation(const Activation& a, const Matrix& z);

/// Backward-mode product: upstream (.) deriv(z) elementwise; for softmax, the
/// exact per-row Jacobian-vector product.
Matrix activation_jacobian_apply(const Activation& a, const Matrix& z,
                                 const Matrix& upstream);

}  // namespace mulnet
