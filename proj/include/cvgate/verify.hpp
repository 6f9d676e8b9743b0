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

// Independent checks for synthesized schedules: 4x4 replay from the native
// coupling, Gaussian covariance propagation, and a numerical solver that
// recovers step times without using any closed form.

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "cvgate/scheduler.hpp"
#include "cvgate/symplectic.hpp"
#include "cvgate/synthesis_xp.hpp"

namespace cvgate {

/// Product of phase rotations and native propagators, in schedule order.
/// Throws ClassMismatch if `native` is not of the schedule's class.
Symplectic4d replay(const GateSchedule &schedule, const CouplingMatrix &native);

/// Replays against the schedule's own native coupling.
Symplectic4d replay(const GateSchedule &schedule);

/// Second moments over (x_A, x_B, p_A, p_B). Vacuum is I/2 (var x = 1/2).
struct CovarianceState {
  Eigen::Matrix4d sigma = 0.5 * Eigen::Matrix4d::Identity();

  static CovarianceState vacuum() { return {}; }

  /// Smallest eigenvalue of sigma + (i/2) Omega; >= 0 for physical states.
  double uncertainty_margin() const;
  /// det(2 sigma), equal to 1 for pure states.
  double purity_determinant() const { return (2 * sigma).determinant(); }
  /// Variance of w . xi.
  double variance(const Eigen::Vector4d &w) const { return w.dot(sigma * w); }
};

/// sigma -> M sigma M^T.
CovarianceState evolve_gaussian(const CovarianceState &state,
                                const Symplectic4d &m);

struct BruteForceOptions {
  int starts = 50;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Starting times are drawn uniformly from [-start_range, start_range].
  double start_range = 3;
  /// Search box |t_i| <= max_abs_time. Needed to make infeasibility
  /// statements meaningful: some infeasible targets are approached with
  /// unbounded times.
  double max_abs_time = 10;
  int max_iterations = 200;
  /// A start counts as converged when its max-entry residual is below this.
  double solution_tol = 1e-8;
};

struct BruteForceResult {
  /// Shortest total-time converged solution; the smallest-residual one when
  /// nothing converged.
  DecompositionParams params;
  double residual = 0;
  bool converged = false;
  /// Distinct converged solutions, ordered by total time.
  std::vector<DecompositionParams> solutions;
};

/// Multi-start damped Gauss-Newton over the alternating n-step composition
/// H1, H2, H1, ... of the normalized class, minimizing the residual against
/// `target`. Deterministic for a given seed: start k draws from its own
/// generator seeded with seed + k, and ties are broken by the
/// lexicographically smallest time vector.
BruteForceResult brute_force_params(const Block2d &target,
                                    const CouplingClass &cls, int n_steps,
                                    const BruteForceOptions &options = {});

struct StepLog {
  std::size_t index = 0;
  PhaseShiftPair pre_phase;
  double duration = 0;
  /// Symplectic defect of the partial product after this step.
  double symplectic_defect = 0;
};

struct VerificationReport {
  double max_entry_error = 0;
  double symplectic_defect = 0;
  double tolerance = 0;
  std::vector<StepLog> steps;
  bool pass = false;
};

/// Replays `schedule` against `native` and compares with the lift of the
/// target block. Failures are reported, never thrown.
VerificationReport verify(const GateSchedule &schedule,
                          const CouplingMatrix &native,
                          const TargetGate &target, double tol);

VerificationReport verify(const GateSchedule &schedule, double tol);

}  // namespace cvgate
