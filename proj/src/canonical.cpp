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

#include "cvgate/canonical.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

namespace cvgate {

namespace {

Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return r;
}

// Angle phi with rotation(phi) == r, for a proper rotation r.
double rotation_angle(const Eigen::Matrix2d &r) {
  return std::atan2(r(0, 1), r(0, 0));
}

}  // namespace

std::string_view to_string(CouplingKind kind) {
  switch (kind) {
    case CouplingKind::XP:
      return "xp";
    case CouplingKind::AmplifierLike:
      return "amplifier";
    case CouplingKind::BeamSplitterLike:
      return "beam_splitter";
  }
  return "unknown";
}

CouplingClass CouplingClass::amplifier(double s) {
  if (!(s > 0) || !std::isfinite(s))
    throw SynthesisError(ErrorKind::InvalidCoupling,
                         "amplifier-like class needs finite s > 0");
  return {CouplingKind::AmplifierLike, s, s == 1.0};
}

CouplingClass CouplingClass::beam_splitter_like(double s) {
  if (!(s > 0) || !std::isfinite(s))
    throw SynthesisError(ErrorKind::InvalidCoupling,
                         "beam-splitter-like class needs finite s > 0");
  return {CouplingKind::BeamSplitterLike, s, false};
}

CouplingMatrix conjugate_hamiltonian(const CouplingMatrix &c,
                                     const PhaseShiftPair &ph) {
  return CouplingMatrix(rotation(ph.phiA).transpose() * c.matrix() *
                        rotation(ph.phiB));
}

CanonicalHamiltonian canonical_form(const CouplingMatrix &c, double tol) {
  // Reorder B's quadratures to (p_B, x_B): the canonical coupling becomes
  // diag(c1, c2) and a rotation R(phi) of mode B becomes R(phi)^T.
  Eigen::Matrix2d swap;
  swap << 0, 1, 1, 0;
  const Eigen::Matrix2d d = c.matrix() * swap;

  Eigen::JacobiSVD<Eigen::Matrix2d> svd(d,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU();
  Eigen::Matrix2d v = svd.matrixV();
  const double sigma1 = svd.singularValues()(0);
  double c2 = svd.singularValues()(1);

  // Make both factors proper rotations, moving the reflections into c2.
  if (u.determinant() < 0) {
    u.col(1) *= -1;
    c2 = -c2;
  }
  if (v.determinant() < 0) {
    v.col(1) *= -1;
    c2 = -c2;
  }

  CanonicalHamiltonian h;
  h.c1 = sigma1;
  // d = u diag(c1, c2) v^T, so R_A = u and R_B = v^T.
  h.rotation = PhaseShiftPair(rotation_angle(u), rotation_angle(v.transpose()));
  if (std::abs(c.determinant()) <= tol * sigma1 * sigma1) {
    h.sign_degenerate = true;
    if (std::abs(c2) <= tol * sigma1) c2 = 0;
  }
  h.c2 = c2;
  return h;
}

CouplingClass classify(double c1, double c2, double tol) {
  if (!(c1 > 0) || !std::isfinite(c1) || !std::isfinite(c2))
    throw SynthesisError(ErrorKind::InvalidCoupling,
                         "canonical coupling needs finite c1 > 0");
  const double ratio = c2 / c1;
  if (std::abs(ratio) <= tol) return CouplingClass::xp();
  const double s = std::sqrt(std::abs(ratio));
  if (ratio > 0) return CouplingClass::amplifier(s);
  return CouplingClass::beam_splitter_like(s);
}

}  // namespace cvgate
