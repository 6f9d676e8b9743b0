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

#include <string>
#include <vector>

#include "cvgate/synthesis_xp.hpp"
#include "cvgate/types.hpp"

namespace cvgate {

/// Symmetric three-step decomposition S1(alpha/s) S2(beta/s) S1(alpha/s) for
/// a normalized generic Hamiltonian. alpha and beta are rescaled times
/// (alpha = s t1, beta = s t2).
struct GenericDecomposition {
  double alpha = 0;
  double beta = 0;
  CouplingClass cls;
  /// |s - 1| < kNearDegenerateBand: interaction times grow like 1/|s - 1|
  bool ill_conditioned = false;

  DecompositionParams params() const;
  /// Same layout with negated times; composes to the inverse gate.
  GenericDecomposition inverse() const { return {-alpha, -beta, cls, ill_conditioned}; }
};

inline constexpr double kNearDegenerateBand = 1e-3;

/// Two-mode squeezer for c2 = s^2 > 0. The root of the quadratic in
/// tanh(alpha) is the one vanishing at r = 0; tanh(alpha) tends to
/// 1/(1/s + 1 + s) as r grows. Throws Degenerate for s = 1.
GenericDecomposition synth_tms_amp(double r, double s);

/// Beam splitter for c2 = s^2 > 0 and phi in [0, pi/2]. Throws Degenerate for
/// s = 1 and OutOfRange outside the interval.
GenericDecomposition synth_bs_amp(double phi, double s);

/// Beam splitter for c2 = -s^2 < 0 and phi in [0, pi/2]; |alpha|, |beta| stay
/// below pi/2.
GenericDecomposition synth_bs_osc(double phi, double s);

/// Two-mode squeezer for c2 = -s^2 < 0, valid up to r_threshold(s). Throws
/// AboveThreshold beyond it and Degenerate for s = 1.
GenericDecomposition synth_tms_osc(double r, double s);

/// cosh(r_th) = sqrt(s^-2 - 1 + s^2); zero at s = 1, symmetric in s <-> 1/s.
double r_threshold(double s);

}  // namespace cvgate
