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

#include "cvgate/synthesis_generic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvgate {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_positive_s(double s) {
  if (!(s > 0) || !std::isfinite(s))
    throw SynthesisError(ErrorKind::InvalidCoupling, "s must be finite and > 0");
}

bool is_unit(double s) { return std::abs(s - 1) <= kUnitTolerance; }

void require_quarter_turn(double phi) {
  if (!(phi >= 0 && phi <= kPi / 2))
    throw SynthesisError(ErrorKind::OutOfRange,
                         "closed form covers phi in [0, pi/2] only");
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

GenericDecomposition make(double alpha, double beta, CouplingClass cls) {
  GenericDecomposition d{alpha, beta, cls, false};
  d.ill_conditioned = std::abs(cls.s - 1) < kNearDegenerateBand;
  return d;
}

}  // namespace

DecompositionParams GenericDecomposition::params() const {
  const double s = cls.s;
  return {{{Generator::H1, alpha / s},
           {Generator::H2, beta / s},
           {Generator::H1, alpha / s}},
          cls};
}

GenericDecomposition synth_tms_amp(double r, double s) {
  require_positive_s(s);
  if (is_unit(s))
    throw SynthesisError(ErrorKind::Degenerate,
                         "c1 = c2: H1 = H2, the two-mode squeezer Hamiltonian "
                         "cannot simulate other gates");
  if (!(r >= 0) || !std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing must be finite and >= 0");
  const auto cls = CouplingClass::amplifier(s);
  if (r == 0) return make(0, 0, cls);

  const double a = s + 1 / s;
  const double k = a * a - 1;  // s^-2 + 1 + s^2
  // e^{-2r} based forms stay finite for large r
  const double e2 = std::exp(-2 * r);
  const double one_minus_tanh = 2 * e2 / (1 + e2);
  const double sech2 = 4 * e2 / ((1 + e2) * (1 + e2));
  const double q = std::sqrt(1 + k * sech2);
  // rationalized root: equals (a - q) / (k tanh r) without the 0/0 at r = 0
  const double y = std::tanh(r) / (a + q);

  // tanh(beta) = 2y / (1 - k y^2). The denominator factorizes as
  // k (y_inf - y)(y - y_minus); y_inf - y is summed from positive terms so
  // beta keeps full precision while tanh(beta) approaches 1.
  const double y_inf_minus_y =
      (a * one_minus_tanh + k * sech2 / (q + 1) + one_minus_tanh) /
      ((a + 1) * (a + q));
  const double y_minus = -(1 + a) / k;
  const double beta =
      0.5 * std::log1p(4 * y / (k * y_inf_minus_y * (y - y_minus)));
  return make(std::atanh(y), beta, cls);
}

GenericDecomposition synth_bs_amp(double phi, double s) {
  require_positive_s(s);
  if (is_unit(s))
    throw SynthesisError(ErrorKind::Degenerate,
                         "s = 1: tanh(alpha) reaches 1 at phi = pi/2, no "
                         "finite beam-splitter schedule");
  require_quarter_turn(phi);
  const auto cls = CouplingClass::amplifier(s);
  if (phi == 0) return make(0, 0, cls);

  const double d = 1 / s - s;
  const double l = d * d + 1;  // s^-2 - 1 + s^2
  const double c = std::cos(phi);
  // both denominator terms carry sign(d): no cancellation
  const double y = -std::sin(phi) / (d * c + sign(d) * std::sqrt(l - c * c));
  const double ay = std::abs(y);
  // tanh(beta) = -2y / (1 + l y^2); |beta| = atanh of that, written as log1p
  const double abs_beta =
      0.5 * std::log1p(4 * ay / ((1 - ay) * (1 - ay) + (l - 1) * y * y));
  return make(std::atanh(y), -sign(y) * abs_beta, cls);
}

GenericDecomposition synth_bs_osc(double phi, double s) {
  require_positive_s(s);
  require_quarter_turn(phi);
  const auto cls = CouplingClass::beam_splitter_like(s);
  if (phi == 0) return make(0, 0, cls);

  const double a = s + 1 / s;
  const double k = a * a - 1;  // s^-2 + 1 + s^2
  const double c = std::cos(phi);
  const double y = -std::sin(phi) / (a * c + std::sqrt(k + c * c));
  const double beta = std::atan(-2 * y / (1 + k * y * y));
  return make(std::atan(y), beta, cls);
}

double r_threshold(double s) {
  require_positive_s(s);
  // sinh^2 r_th = cosh^2 r_th - 1 = (1/s - s)^2
  return std::asinh(std::abs(1 / s - s));
}

GenericDecomposition synth_tms_osc(double r, double s) {
  require_positive_s(s);
  if (is_unit(s))
    throw SynthesisError(ErrorKind::Degenerate,
                         "s = 1: squeezing threshold is zero");
  if (!(r >= 0) || !std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing must be finite and >= 0");
  const double d = 1 / s - s;
  const double sh = std::sinh(r);
  // a few ulps of slack so that r = r_threshold(s) itself is accepted
  if (sh > std::abs(d) * (1 + 8 * std::numeric_limits<double>::epsilon()))
    throw SynthesisError(ErrorKind::AboveThreshold,
                         "r exceeds the single-block threshold r_th(s)");
  const auto cls = CouplingClass::beam_splitter_like(s);
  if (r == 0) return make(0, 0, cls);

  const double l = d * d + 1;  // s^-2 - 1 + s^2
  // l - cosh^2 r = d^2 - sinh^2 r, factorized to stay accurate at threshold
  const double radicand = std::max(0.0, (std::abs(d) - sh) * (std::abs(d) + sh));
  const double y = sh / (d * std::cosh(r) + sign(d) * std::sqrt(radicand));
  const double beta = std::atan2(2 * y, 1 - l * y * y);
  return make(std::atan(y), beta, cls);
}

}  // namespace cvgate
