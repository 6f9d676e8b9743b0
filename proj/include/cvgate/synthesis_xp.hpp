// Copyright 2026 The cvgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "cvgate/symplectic.hpp"
#include "cvgate/types.hpp"

namespace cvgate {

struct DecompositionStep {
  Generator generator = Generator::H1;
  /// Signed interaction time in units of 1/c1. Negative values are realized
  /// by the scheduler with a sign-flipping phase shift.
  double time = 0;
};

/// Abstract gate decomposition: steps in the order they are applied, for a
/// Hamiltonian of the given class. Generators alternate.
struct DecompositionParams {
  std::vector<DecompositionStep> steps;
  CouplingClass cls;

  /// Checks finiteness and alternation.
  bool valid() const;
  /// Sum of |time|.
  double total_time() const;
};

/// Product of the step propagators, last applied step leftmost.
template <typename Scalar = double>
Block<Scalar> compose(const DecompositionParams &params) {
  Block<Scalar> m = Block<Scalar>::Identity();
  for (const auto &step : params.steps)
    m = propagator_for<Scalar>(params.cls, step.generator, Scalar(step.time)) *
        m;
  return m;
}

template <typename Scalar = double>
Block<Scalar> compose(const std::vector<DecompositionParams> &blocks) {
  Block<Scalar> m = Block<Scalar>::Identity();
  for (const auto &b : blocks) m = compose<Scalar>(b) * m;
  return m;
}

/// Angles within this distance of pi are rejected as PoleAngle.
inline constexpr double kPoleTolerance = 1e-12;

/// Beam splitter S1(alpha) S2(beta) S1(alpha) with alpha = -tan(phi/2),
/// beta = sin(phi). phi is reduced to (-pi, pi]; phi = pi throws PoleAngle.
DecompositionParams synth_bs_xp(double phi);

/// Two-mode squeezer with alpha = tanh(r/2), beta = sinh(r).
DecompositionParams synth_tms_xp(double r);

/// n two-mode squeezers of strength r/n. For small r/n each block costs about
/// 2r/n, so the total approaches 2r instead of growing like e^r / 2.
std::vector<DecompositionParams> split_tms(double r, int n);

/// Four-step single-mode squeezer S2(delta) S1(gamma) S2(beta) S1(alpha) with
/// beta = (e^r - 1)/alpha, gamma = -alpha e^-r, delta = e^r (1 - e^r)/alpha.
/// Without an explicit alpha the total-time minimizer is used.
DecompositionParams synth_sms_xp(double r,
                                 std::optional<double> alpha = std::nullopt);

/// alpha = sqrt((e^{2r} - 1)/(1 + e^-r)), the minimizer of
/// |alpha| + |beta| + |gamma| + |delta| for r > 0.
double optimal_alpha_sms(double r);

/// Minimizer of the total time for any r != 0: alpha^2 = e^r |e^r - 1|.
/// Coincides with optimal_alpha_sms for r > 0.
double time_optimal_alpha_sms(double r);

}  // namespace cvgate
