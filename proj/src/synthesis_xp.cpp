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

#include "cvgate/synthesis_xp.hpp"

#include <cmath>
#include <string>

#include "cvgate/targets.hpp"

namespace cvgate {

bool DecompositionParams::valid() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!std::isfinite(steps[i].time)) return false;
    if (i > 0 && steps[i].generator == steps[i - 1].generator) return false;
  }
  return true;
}

double DecompositionParams::total_time() const {
  double t = 0;
  for (const auto &s : steps) t += std::abs(s.time);
  return t;
}

namespace {

DecompositionParams three_step(double alpha, double beta, double gamma) {
  return {{{Generator::H1, alpha}, {Generator::H2, beta}, {Generator::H1, gamma}},
          CouplingClass::xp()};
}

}  // namespace

DecompositionParams synth_bs_xp(double phi) {
  if (!std::isfinite(phi))
    throw SynthesisError(ErrorKind::OutOfRange, "beam splitter angle not finite");
  const double reduced = reduce_angle_symmetric(phi);
  if (std::abs(reduced - kPi) <= kPoleTolerance ||
      std::abs(reduced + kPi) <= kPoleTolerance)
    throw SynthesisError(ErrorKind::PoleAngle,
                         "phi = pi: tan(phi/2) diverges; split into two swaps");
  // half-angle forms of -tan(phi/2); each is exact at phi = +-pi/2
  const double sn = std::sin(reduced), cs = std::cos(reduced);
  double alpha = cs >= 0 ? -sn / (1 + cs) : -(1 - cs) / sn;
  if (alpha == 0) alpha = 0;  // drop the sign of -0
  return three_step(alpha, sn, alpha);
}

DecompositionParams synth_tms_xp(double r) {
  if (!std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing not finite");
  const double alpha = std::tanh(r / 2);
  return three_step(alpha, std::sinh(r), alpha);
}

std::vector<DecompositionParams> split_tms(double r, int n) {
  if (n < 1)
    throw SynthesisError(ErrorKind::OutOfRange, "split count must be >= 1");
  return std::vector<DecompositionParams>(static_cast<std::size_t>(n),
                                          synth_tms_xp(r / n));
}

double optimal_alpha_sms(double r) {
  if (!(r > 0))
    throw SynthesisError(ErrorKind::NonPositiveR,
                         "optimal alpha is derived for r > 0");
  return std::sqrt(std::expm1(2 * r) / (1 + std::exp(-r)));
}

double time_optimal_alpha_sms(double r) {
  if (r > 0) return optimal_alpha_sms(r);
  if (r == 0)
    throw SynthesisError(ErrorKind::NonPositiveR,
                         "identity squeezer has no optimal alpha");
  return std::sqrt(std::exp(r) * -std::expm1(r));
}

DecompositionParams synth_sms_xp(double r, std::optional<double> alpha) {
  if (!std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing not finite");
  if (alpha && *alpha == 0)
    throw SynthesisError(ErrorKind::ZeroAlpha, "alpha must be nonzero");
  if (alpha && !std::isfinite(*alpha))
    throw SynthesisError(ErrorKind::OutOfRange, "alpha not finite");

  DecompositionParams p{{}, CouplingClass::xp()};
  if (!alpha && r == 0) {
    // limit of the time-optimal family: every step vanishes
    p.steps = {{Generator::H1, 0.0},
               {Generator::H2, 0.0},
               {Generator::H1, 0.0},
               {Generator::H2, 0.0}};
    return p;
  }
  const double a = alpha ? *alpha : time_optimal_alpha_sms(r);
  const double er = std::exp(r);
  const double em1 = std::expm1(r);
  p.steps = {{Generator::H1, a},
             {Generator::H2, em1 / a},
             {Generator::H1, -a / er},
             {Generator::H2, -er * em1 / a}};
  return p;
}

}  // namespace cvgate
