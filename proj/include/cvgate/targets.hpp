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

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <variant>

#include "cvgate/types.hpp"

namespace cvgate {

/// Beam splitter [[cos phi, sin phi], [-sin phi, cos phi]].
template <typename Scalar = double>
Block<Scalar> beam_splitter_block(Scalar phi) {
  using std::cos;
  using std::sin;
  Block<Scalar> m;
  m << cos(phi), sin(phi), -sin(phi), cos(phi);
  return m;
}

/// Two-mode squeezer [[cosh r, sinh r], [sinh r, cosh r]].
template <typename Scalar = double>
Block<Scalar> two_mode_squeezer_block(Scalar r) {
  using std::cosh;
  using std::sinh;
  Block<Scalar> m;
  m << cosh(r), sinh(r), sinh(r), cosh(r);
  return m;
}

/// Single-mode squeezer diag(e^r, e^-r); x_B is anti-squeezed.
template <typename Scalar = double>
Block<Scalar> single_mode_squeezer_block(Scalar r) {
  using std::exp;
  Block<Scalar> m;
  m << exp(r), Scalar(0), Scalar(0), exp(-r);
  return m;
}

struct BeamSplitter {
  double phi = 0;
};
struct TwoModeSqueezer {
  double r = 0;
};
struct SingleModeSqueezer {
  double r = 0;
};
struct CustomGate {
  Block2d block = Block2d::Identity();
};

/// Gate to be synthesized, described by its x-block.
struct TargetGate {
  std::variant<BeamSplitter, TwoModeSqueezer, SingleModeSqueezer, CustomGate>
      gate;

  static TargetGate beam_splitter(double phi);
  static TargetGate two_mode_squeezer(double r);
  static TargetGate single_mode_squeezer(double r);
  /// Throws OutOfRange unless det(block) = 1 within tol.
  static TargetGate custom(const Block2d &block, double tol = 1e-9);

  Block2d block() const;
  std::string describe() const;
};

/// Reduces an angle to (-pi, pi].
double reduce_angle_symmetric(double phi);

}  // namespace cvgate
