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

// Closed-form Heisenberg-picture propagators for quadratic two-mode
// Hamiltonians, and the lifts between 2x2 x-blocks and full 4x4 phase-space
// matrices. Everything here is templated on the scalar type so the same code
// can be evaluated in extended precision by the test oracles.

#include <Eigen/Core>
#include <Eigen/LU>
#include <cmath>

#include "cvgate/types.hpp"

namespace cvgate {

namespace detail {

/// exp(t [[0, a], [b, 0]]). The generator squares to (ab) I, which gives the
/// closed form cosh/sinh, cos/sin or 1 + t M depending on the sign of ab.
template <typename Scalar>
Block<Scalar> exp_antidiagonal(Scalar a, Scalar b, Scalar t) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  Block<Scalar> gen;
  gen << Scalar(0), a, b, Scalar(0);
  const Scalar lambda = a * b;
  Scalar even, odd;
  if (lambda > 0) {
    const Scalar w = sqrt(lambda);
    even = cosh(w * t);
    odd = sinh(w * t) / w;
  } else if (lambda < 0) {
    const Scalar w = sqrt(-lambda);
    even = cos(w * t);
    odd = sin(w * t) / w;
  } else {
    even = Scalar(1);
    odd = t;
  }
  return even * Block<Scalar>::Identity() + odd * gen;
}

}  // namespace detail

/// x-block propagator of exp(-i g t) for the canonical pair (c1, c2).
/// H1 drives x_B with c1 x_A and x_A with c2 x_B; H2 swaps the roles.
template <typename Scalar>
Block<Scalar> propagator(Scalar c1, Scalar c2, Generator g, Scalar t) {
  return g == Generator::H1 ? detail::exp_antidiagonal(c2, c1, t)
                            : detail::exp_antidiagonal(c1, c2, t);
}

/// XP coupling: S1(t) = [[1, 0], [t, 1]], S2(t) = [[1, t], [0, 1]].
template <typename Scalar = double>
Block<Scalar> propagator_xp(Generator g, Scalar t) {
  return propagator<Scalar>(Scalar(1), Scalar(0), g, t);
}

/// Propagator of the normalized generic Hamiltonian (c1 = 1, c2 = +-s^2).
template <typename Scalar = double>
Block<Scalar> propagator_generic(const CouplingClass &cls, Generator g,
                                 Scalar t) {
  if (cls.kind == CouplingKind::XP)
    throw SynthesisError(ErrorKind::WrongClass,
                         "propagator_generic requires an amplifier-like or "
                         "beam-splitter-like class");
  return propagator<Scalar>(Scalar(1), Scalar(cls.normalized_c2()), g, t);
}

/// Propagator for a coupling class, XP included.
template <typename Scalar = double>
Block<Scalar> propagator_for(const CouplingClass &cls, Generator g, Scalar t) {
  return propagator<Scalar>(Scalar(1), Scalar(cls.normalized_c2()), g, t);
}

/// Momentum block R = (S^-1)^T fixed by the canonical commutators.
template <typename Derived>
Block<typename Derived::Scalar> p_block(const Eigen::MatrixBase<Derived> &s,
                                        double tol = kDefaultTolerance) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  const Scalar det = s.determinant();
  if (!(abs(det) >= Scalar(tol)))
    throw SynthesisError(ErrorKind::Singular, "x-block is singular");
  Block<Scalar> r;
  // inverse transpose of [[a, b], [c, d]] is [[d, -c], [-b, a]] / det
  r << s(1, 1), -s(1, 0), -s(0, 1), s(0, 0);
  return r / det;
}

/// diag(S, (S^-1)^T) on (x_A, x_B, p_A, p_B).
template <typename Derived>
Symplectic<typename Derived::Scalar> lift_full(
    const Eigen::MatrixBase<Derived> &s, double tol = kDefaultTolerance) {
  using Scalar = typename Derived::Scalar;
  Symplectic<Scalar> m = Symplectic<Scalar>::Zero();
  m.template topLeftCorner<2, 2>() = s;
  m.template bottomRightCorner<2, 2>() = p_block(s, tol);
  return m;
}

/// Heisenberg action of exp(-i phi n): x -> x cos(phi) + p sin(phi),
/// p -> -x sin(phi) + p cos(phi), applied to each mode with its own angle.
template <typename Scalar = double>
Symplectic<Scalar> phase_rotation_full(Scalar phiA, Scalar phiB) {
  using std::cos;
  using std::sin;
  Symplectic<Scalar> m = Symplectic<Scalar>::Zero();
  const Scalar ca = cos(phiA), sa = sin(phiA);
  const Scalar cb = cos(phiB), sb = sin(phiB);
  m(0, 0) = ca;
  m(0, 2) = sa;
  m(2, 0) = -sa;
  m(2, 2) = ca;
  m(1, 1) = cb;
  m(1, 3) = sb;
  m(3, 1) = -sb;
  m(3, 3) = cb;
  return m;
}

template <typename Scalar = double>
Symplectic<Scalar> phase_rotation_full(const PhaseShiftPair &ph) {
  return phase_rotation_full<Scalar>(Scalar(ph.phiA), Scalar(ph.phiB));
}

/// Omega with [x_j, p_k] = i delta_jk in the (x_A, x_B, p_A, p_B) ordering.
template <typename Scalar = double>
Symplectic<Scalar> symplectic_form() {
  Symplectic<Scalar> omega = Symplectic<Scalar>::Zero();
  omega.template topRightCorner<2, 2>().setIdentity();
  omega.template bottomLeftCorner<2, 2>() = -Block<Scalar>::Identity();
  return omega;
}

/// max |M Omega M^T - Omega|.
template <typename Derived>
typename Derived::Scalar symplectic_defect(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  const Symplectic<Scalar> omega = symplectic_form<Scalar>();
  return (m * omega * m.transpose() - omega).cwiseAbs().maxCoeff();
}

/// Generator A of the Heisenberg flow d(xi)/dt = A xi for an arbitrary
/// coupling matrix, xi = (x_A, x_B, p_A, p_B).
template <typename Scalar = double>
Symplectic<Scalar> hamiltonian_generator(const Eigen::Matrix2d &c) {
  Symplectic<Scalar> a = Symplectic<Scalar>::Zero();
  // dx_A/dt = c21 x_B + c22 p_B     dp_A/dt = -c11 x_B - c12 p_B
  // dx_B/dt = c12 x_A + c22 p_A     dp_B/dt = -c11 x_A - c21 p_A
  a(0, 1) = Scalar(c(1, 0));
  a(0, 3) = Scalar(c(1, 1));
  a(1, 0) = Scalar(c(0, 1));
  a(1, 2) = Scalar(c(1, 1));
  a(2, 1) = Scalar(-c(0, 0));
  a(2, 3) = Scalar(-c(0, 1));
  a(3, 0) = Scalar(-c(0, 0));
  a(3, 2) = Scalar(-c(1, 0));
  return a;
}

/// Full 4x4 propagator of exp(-i H t) for an arbitrary coupling. The generator
/// squares to -det(C) I, so the exponential again has a two-term closed form.
template <typename Scalar = double>
Symplectic<Scalar> propagator_full(const CouplingMatrix &coupling, Scalar t) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  const Symplectic<Scalar> a = hamiltonian_generator<Scalar>(coupling.matrix());
  const Scalar lambda = -Scalar(coupling.determinant());
  Scalar even, odd;
  if (lambda > 0) {
    const Scalar w = sqrt(lambda);
    even = cosh(w * t);
    odd = sinh(w * t) / w;
  } else if (lambda < 0) {
    const Scalar w = sqrt(-lambda);
    even = cos(w * t);
    odd = sin(w * t) / w;
  } else {
    // nilpotent generator: A^2 = 0 whenever det C = 0
    even = Scalar(1);
    odd = t;
  }
  return even * Symplectic<Scalar>::Identity() + odd * a;
}

}  // namespace cvgate
