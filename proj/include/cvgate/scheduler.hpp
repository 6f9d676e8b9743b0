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

#include "cvgate/synthesis_generic.hpp"
#include "cvgate/synthesis_xp.hpp"
#include "cvgate/targets.hpp"
#include "cvgate/types.hpp"

namespace cvgate {

struct ScheduleStep {
  /// Local phase shift applied just before this evolution interval.
  PhaseShiftPair pre_phase;
  /// Evolution time under the native Hamiltonian, in the native time unit.
  double duration = 0;
};

/// Physical pulse schedule: for each step apply pre_phase, then evolve under
/// the fixed native Hamiltonian for duration; finish with post_phase.
struct GateSchedule {
  std::vector<ScheduleStep> steps;
  PhaseShiftPair post_phase;
  /// Local rotation taking the native coupling to its canonical form, when the
  /// native coupling was supplied as a full matrix. Already folded into the
  /// first pre_phase and into post_phase; kept for bookkeeping.
  std::optional<PhaseShiftPair> canonicalization_phase;
  double total_time = 0;
  TargetGate target;

  /// Canonical form of the native Hamiltonian (c1 carries the time unit).
  CanonicalHamiltonian hamiltonian;
  /// Native coupling as supplied, if it was given as a full matrix.
  std::optional<Eigen::Matrix2d> native_coupling;
  CouplingClass cls;
  /// Number of concatenated synthesis blocks.
  int n_blocks = 0;
  bool fused = true;

  /// Coupling matrix the schedule must be replayed against.
  CouplingMatrix native() const;
};

/// Phase pair V with V^dag H1 V = +-H1 or +-H2, for canonical H1.
PhaseShiftPair generator_phase(Generator g, bool negative);

struct ScheduleOptions {
  /// Fuse consecutive phase shifts (and merge intervals whose fused shift is
  /// the identity). Disabling keeps every V_k and V_k^dag explicit.
  bool fuse = true;
};

/// Turns abstract blocks, applied in order, into a physical schedule for
/// `native`. Zero-time steps are dropped. Throws ClassMismatch when a block
/// was synthesized for a different coupling class.
GateSchedule build_schedule(const std::vector<DecompositionParams> &blocks,
                            const CanonicalHamiltonian &native,
                            const TargetGate &target,
                            const ScheduleOptions &options = {});

GateSchedule build_schedule(const DecompositionParams &params,
                            const CanonicalHamiltonian &native,
                            const TargetGate &target,
                            const ScheduleOptions &options = {});

GateSchedule build_schedule(const GenericDecomposition &decomposition,
                            const CanonicalHamiltonian &native,
                            const TargetGate &target,
                            const ScheduleOptions &options = {});

inline constexpr double kDefaultMargin = 0.1;

/// Number of equal chunks used above threshold:
/// ceil(r / ((1 - margin) r_th(s))).
int threshold_block_count(double r, double s, double margin);

/// Two-mode squeezing on a beam-splitter-like Hamiltonian by concatenating
/// threshold_block_count() three-step blocks.
GateSchedule schedule_tms_above_threshold(double r,
                                          const CanonicalHamiltonian &native,
                                          double margin = kDefaultMargin,
                                          const ScheduleOptions &options = {});

GateSchedule schedule_tms_above_threshold(double r, double s,
                                          double margin = kDefaultMargin,
                                          const ScheduleOptions &options = {});

/// Beam splitter at phi = pi (x-block -I) on the XP coupling, as two swaps.
GateSchedule resolve_pole_bs(const CanonicalHamiltonian &native,
                             const ScheduleOptions &options = {});

struct SynthesisOptions {
  ScheduleOptions schedule;
  double margin = kDefaultMargin;
  /// Concatenate blocks when an oscillatory squeezer exceeds r_th.
  bool allow_concatenation = true;
  /// Number of equal two-mode-squeezer blocks for the XP coupling.
  int tms_split = 1;
  /// Free parameter of the XP single-mode squeezer; time-optimal if unset.
  std::optional<double> sms_alpha;
  double tol = kDefaultTolerance;
};

/// Dispatches a target onto the closed forms for the class of `native`,
/// extending them where needed: negative angles and squeezing by inverting a
/// symmetric block, generic beam splitters past pi/2 by halving, the XP pole
/// by two swaps, oscillatory squeezing above threshold by concatenation, and
/// custom blocks by the numerical solver.
GateSchedule synthesize(const TargetGate &target,
                        const CanonicalHamiltonian &native,
                        const SynthesisOptions &options = {});

/// Same, with a non-canonical native coupling: canonicalizes first and keeps
/// the full matrix for replay.
GateSchedule synthesize(const TargetGate &target, const CouplingMatrix &native,
                        const SynthesisOptions &options = {});

}  // namespace cvgate
