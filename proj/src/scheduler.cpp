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

#include "cvgate/scheduler.hpp"

#include <cmath>
#include <string>

#include "cvgate/canonical.hpp"
#include "cvgate/verify.hpp"

namespace cvgate {

CouplingMatrix GateSchedule::native() const {
  if (native_coupling) return CouplingMatrix(*native_coupling);
  return hamiltonian.coupling();
}

PhaseShiftPair generator_phase(Generator g, bool negative) {
  // (a) +H1: (0, 0)    (b) +H2: (pi/2, 3pi/2)
  // (c) -H1: (pi, 0)   (d) -H2: (pi/2, pi/2)
  if (g == Generator::H1)
    return negative ? PhaseShiftPair(kPi, 0) : PhaseShiftPair(0, 0);
  return negative ? PhaseShiftPair(kPi / 2, kPi / 2)
                  : PhaseShiftPair(kPi / 2, 3 * kPi / 2);
}

GateSchedule build_schedule(const std::vector<DecompositionParams> &blocks,
                            const CanonicalHamiltonian &native,
                            const TargetGate &target,
                            const ScheduleOptions &options) {
  const CouplingClass cls = classify(native);
  for (const auto &block : blocks) {
    if (!block.cls.compatible_with(cls))
      throw SynthesisError(ErrorKind::ClassMismatch,
                           std::string("decomposition for class ") +
                               std::string(to_string(block.cls.kind)) +
                               " cannot run on a " +
                               std::string(to_string(cls.kind)) +
                               " Hamiltonian");
    if (!block.valid())
      throw SynthesisError(ErrorKind::OutOfRange,
                           "decomposition has non-finite or non-alternating steps");
  }

  GateSchedule out;
  out.target = target;
  out.hamiltonian = native;
  out.cls = cls;
  out.n_blocks = static_cast<int>(blocks.size());
  out.fused = options.fuse;
  if (!native.rotation.is_identity()) out.canonicalization_phase = native.rotation;

  // Phase currently applied relative to the lab frame.
  PhaseShiftPair frame;
  for (const auto &block : blocks) {
    for (const auto &step : block.steps) {
      if (step.time == 0) continue;
      const PhaseShiftPair desired =
          generator_phase(step.generator, step.time < 0) + native.rotation;
      const double duration = std::abs(step.time) / native.c1;
      if (options.fuse) {
        const PhaseShiftPair pre = desired - frame;
        if (pre.is_identity() && !out.steps.empty())
          out.steps.back().duration += duration;
        else
          out.steps.push_back({pre, duration});
      } else {
        if (!frame.is_identity()) out.steps.push_back({-frame, 0.0});
        out.steps.push_back({desired, duration});
      }
      frame = desired;
    }
  }
  out.post_phase = -frame;
  for (const auto &s : out.steps) out.total_time += s.duration;
  return out;
}

GateSchedule build_schedule(const DecompositionParams &params,
                            const CanonicalHamiltonian &native,
                            const TargetGate &target,
                            const ScheduleOptions &options) {
  return build_schedule(std::vector<DecompositionParams>{params}, native, target,
                        options);
}

GateSchedule build_schedule(const GenericDecomposition &decomposition,
                            const CanonicalHamiltonian &native,
                            const TargetGate &target,
                            const ScheduleOptions &options) {
  return build_schedule(decomposition.params(), native, target, options);
}

int threshold_block_count(double r, double s, double margin) {
  if (!(margin > 0 && margin < 1))
    throw SynthesisError(ErrorKind::OutOfRange, "margin must lie in (0, 1)");
  if (!(r >= 0) || !std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing must be finite and >= 0");
  const double rth = r_threshold(s);
  if (rth == 0)
    throw SynthesisError(ErrorKind::Degenerate,
                         "s = 1: zero squeezing threshold, no finite split");
  if (r == 0) return 1;
  const double n = std::ceil(r / ((1 - margin) * rth));
  if (n > 1e6)
    throw SynthesisError(ErrorKind::OutOfRange,
                         "squeezing needs more than 1e6 concatenated blocks");
  return static_cast<int>(n);
}

namespace {

std::vector<DecompositionParams> threshold_blocks(double r, double s,
                                                  double margin) {
  const int n = threshold_block_count(std::abs(r), s, margin);
  GenericDecomposition d = synth_tms_osc(std::abs(r) / n, s);
  if (r < 0) d = d.inverse();
  return std::vector<DecompositionParams>(static_cast<std::size_t>(n),
                                          d.params());
}

GenericDecomposition signed_generic(GenericDecomposition d, bool negative) {
  return negative ? d.inverse() : d;
}

}  // namespace

GateSchedule schedule_tms_above_threshold(double r,
                                          const CanonicalHamiltonian &native,
                                          double margin,
                                          const ScheduleOptions &options) {
  const CouplingClass cls = classify(native);
  if (cls.kind != CouplingKind::BeamSplitterLike)
    throw SynthesisError(ErrorKind::ClassMismatch,
                         "threshold splitting needs a beam-splitter-like "
                         "Hamiltonian");
  if (!(r > 0))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing must be > 0");
  return build_schedule(threshold_blocks(r, cls.s, margin), native,
                        TargetGate::two_mode_squeezer(r), options);
}

GateSchedule schedule_tms_above_threshold(double r, double s, double margin,
                                          const ScheduleOptions &options) {
  CanonicalHamiltonian native;
  native.c1 = 1;
  native.c2 = -s * s;
  return schedule_tms_above_threshold(r, native, margin, options);
}

GateSchedule resolve_pole_bs(const CanonicalHamiltonian &native,
                             const ScheduleOptions &options) {
  if (classify(native).kind != CouplingKind::XP)
    throw SynthesisError(ErrorKind::ClassMismatch,
                         "pole resolution applies to the XP coupling");
  const DecompositionParams swap = synth_bs_xp(kPi / 2);
  return build_schedule({swap, swap}, native, TargetGate::beam_splitter(kPi),
                        options);
}

GateSchedule synthesize(const TargetGate &target,
                        const CanonicalHamiltonian &native,
                        const SynthesisOptions &options) {
  const CouplingClass cls = classify(native, options.tol);
  const bool xp = cls.kind == CouplingKind::XP;
  const bool amplifier = cls.kind == CouplingKind::AmplifierLike;
  std::vector<DecompositionParams> blocks;

  if (const auto *bs = std::get_if<BeamSplitter>(&target.gate)) {
    const double phi = reduce_angle_symmetric(bs->phi);
    if (xp) {
      if (std::abs(std::abs(phi) - kPi) <= kPoleTolerance) {
        GateSchedule s = resolve_pole_bs(native, options.schedule);
        s.target = target;
        return s;
      }
      blocks.push_back(synth_bs_xp(phi));
    } else {
      const auto synth = amplifier ? synth_bs_amp : synth_bs_osc;
      const double mag = std::abs(phi);
      if (mag <= kPi / 2) {
        blocks.push_back(signed_generic(synth(mag, cls.s), phi < 0).params());
      } else {
        const auto half = signed_generic(synth(mag / 2, cls.s), phi < 0).params();
        blocks = {half, half};
      }
    }
  } else if (const auto *tms = std::get_if<TwoModeSqueezer>(&target.gate)) {
    const double r = tms->r;
    if (xp) {
      blocks = split_tms(r, options.tms_split);
    } else if (amplifier) {
      blocks.push_back(signed_generic(synth_tms_amp(std::abs(r), cls.s), r < 0).params());
    } else if (std::abs(r) <= r_threshold(cls.s) || !options.allow_concatenation) {
      blocks.push_back(signed_generic(synth_tms_osc(std::abs(r), cls.s), r < 0).params());
    } else {
      blocks = threshold_blocks(r, cls.s, options.margin);
    }
  } else if (const auto *sms = std::get_if<SingleModeSqueezer>(&target.gate)) {
    if (!xp)
      throw SynthesisError(ErrorKind::WrongClass,
                           "single-mode squeezer is available for the XP "
                           "coupling only");
    blocks.push_back(synth_sms_xp(sms->r, options.sms_alpha));
  } else {
    const Block2d goal = std::get<CustomGate>(target.gate).block;
    BruteForceOptions bf;
    bf.solution_tol = std::max(options.tol, 1e-12);
    bool found = false;
    for (int n = 1; n <= 6 && !found; ++n) {
      BruteForceResult res = brute_force_params(goal, cls, n, bf);
      if (res.converged) {
        blocks.push_back(res.params);
        found = true;
      }
    }
    if (!found)
      throw SynthesisError(ErrorKind::NoConvergence,
                           "no schedule of up to six steps found for the "
                           "custom target");
  }

  return build_schedule(blocks, native, target, options.schedule);
}

GateSchedule synthesize(const TargetGate &target, const CouplingMatrix &native,
                        const SynthesisOptions &options) {
  const CanonicalHamiltonian canonical = canonical_form(native, options.tol);
  GateSchedule s = synthesize(target, canonical, options);
  s.native_coupling = native.matrix();
  s.canonicalization_phase = canonical.rotation;
  return s;
}

}  // namespace cvgate
