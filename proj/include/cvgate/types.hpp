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
#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <string_view>

#include "cvgate/errors.hpp"

namespace cvgate {

/// 2x2 block acting on the position quadratures (x_A, x_B).
template <typename Scalar = double>
using Block = Eigen::Matrix<Scalar, 2, 2>;

/// 4x4 phase-space matrix in the ordering (x_A, x_B, p_A, p_B).
template <typename Scalar = double>
using Symplectic = Eigen::Matrix<Scalar, 4, 4>;

using Block2d = Block<double>;
using Symplectic4d = Symplectic<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultTolerance = 1e-10;

/// The two canonical generators reachable from a fixed Hamiltonian by local
/// phase shifts: H1 = c1 x_A p_B + c2 p_A x_B and H2 = c2 x_A p_B + c1 p_A x_B.
enum class Generator { H1, H2 };

inline Generator other(Generator g) {
  return g == Generator::H1 ? Generator::H2 : Generator::H1;
}

inline std::string_view to_string(Generator g) {
  return g == Generator::H1 ? "H1" : "H2";
}

/// Reduces an angle to [0, 2pi).
inline double wrap_angle(double phi) {
  double r = std::fmod(phi, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi; the
  // comparison with 0 also normalizes -0.0
  if (r >= 2 * kPi || r == 0) r = 0;
  return r;
}

/// Local phase shift exp(-i phiA a^dag a) (x) exp(-i phiB b^dag b). Angles are
/// kept reduced to [0, 2pi).
struct PhaseShiftPair {
  double phiA = 0;
  double phiB = 0;

  PhaseShiftPair() = default;
  PhaseShiftPair(double a, double b) : phiA(wrap_angle(a)), phiB(wrap_angle(b)) {}

  bool is_identity() const { return phiA == 0 && phiB == 0; }

  friend PhaseShiftPair operator+(const PhaseShiftPair &l,
                                  const PhaseShiftPair &r) {
    return {l.phiA + r.phiA, l.phiB + r.phiB};
  }
  friend PhaseShiftPair operator-(const PhaseShiftPair &l,
                                  const PhaseShiftPair &r) {
    return {l.phiA - r.phiA, l.phiB - r.phiB};
  }
  PhaseShiftPair operator-() const { return {-phiA, -phiB}; }
};

/// Coefficients of H = c11 x_A x_B + c12 x_A p_B + c21 p_A x_B + c22 p_A p_B.
/// Rows are indexed by (x_A, p_A), columns by (x_B, p_B).
class CouplingMatrix {
 public:
  CouplingMatrix(double c11, double c12, double c21, double c22) {
    m_ << c11, c12, c21, c22;
    validate();
  }
  explicit CouplingMatrix(const Eigen::Matrix2d &m) : m_(m) { validate(); }

  /// The canonical coupling c1 x_A p_B + c2 p_A x_B.
  static CouplingMatrix canonical(double c1, double c2) {
    return CouplingMatrix(0.0, c1, c2, 0.0);
  }

  const Eigen::Matrix2d &matrix() const { return m_; }
  double c11() const { return m_(0, 0); }
  double c12() const { return m_(0, 1); }
  double c21() const { return m_(1, 0); }
  double c22() const { return m_(1, 1); }
  double determinant() const { return m_.determinant(); }

 private:
  void validate() const {
    if (!m_.allFinite())
      throw SynthesisError(ErrorKind::InvalidCoupling,
                           "coupling matrix has non-finite entries");
    if (m_.isZero(0.0))
      throw SynthesisError(ErrorKind::InvalidCoupling,
                           "coupling matrix is zero (no interaction)");
  }

  Eigen::Matrix2d m_;
};

/// Canonical form c1 x_A p_B + c2 p_A x_B of a coupling, together with the
/// local rotation that maps the native coupling onto it.
struct CanonicalHamiltonian {
  double c1 = 1;
  double c2 = 0;
  /// conjugate_hamiltonian(native, rotation) == canonical coupling
  PhaseShiftPair rotation;
  /// det C vanished, so the sign of c2 carries no information
  bool sign_degenerate = false;

  CouplingMatrix coupling() const { return CouplingMatrix::canonical(c1, c2); }
};

enum class CouplingKind { XP, AmplifierLike, BeamSplitterLike };

std::string_view to_string(CouplingKind kind);

/// Dynamical family of a canonical Hamiltonian after rescaling to c1 = 1:
/// c2 = 0 (XP), c2 = s^2 (amplifier-like) or c2 = -s^2 (beam-splitter-like).
struct CouplingClass {
  CouplingKind kind = CouplingKind::XP;
  double s = 0;
  bool tms_degenerate = false;

  static CouplingClass xp() { return {}; }
  static CouplingClass amplifier(double s);
  static CouplingClass beam_splitter_like(double s);

  /// c2 / c1 of the normalized Hamiltonian.
  double normalized_c2() const {
    switch (kind) {
      case CouplingKind::AmplifierLike:
        return s * s;
      case CouplingKind::BeamSplitterLike:
        return -s * s;
      case CouplingKind::XP:
        break;
    }
    return 0;
  }

  bool compatible_with(const CouplingClass &other, double tol = 1e-12) const {
    if (kind != other.kind) return false;
    if (kind == CouplingKind::XP) return true;
    return std::abs(s - other.s) <= tol * std::max(1.0, s);
  }

  /// Same physical coupling up to relabeling H1 and H2, which maps s to 1/s.
  bool equivalent_to(const CouplingClass &other, double tol = 1e-12) const {
    if (compatible_with(other, tol)) return true;
    if (kind != other.kind || other.s <= 0) return false;
    return std::abs(s - 1 / other.s) <= tol * std::max(1.0, s);
  }
};

}  // namespace cvgate
