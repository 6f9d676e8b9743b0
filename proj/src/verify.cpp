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

#include "cvgate/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "cvgate/canonical.hpp"

namespace cvgate {

Symplectic4d replay(const GateSchedule &schedule, const CouplingMatrix &native) {
  const CouplingClass cls = classify(canonical_form(native));
  if (!schedule.steps.empty() && !cls.equivalent_to(schedule.cls, 1e-9))
    throw SynthesisError(ErrorKind::ClassMismatch,
                         "schedule was built for a different coupling class");
  Symplectic4d m = Symplectic4d::Identity();
  for (const auto &step : schedule.steps) {
    m = phase_rotation_full(step.pre_phase) * m;
    m = propagator_full(native, step.duration) * m;
  }
  return phase_rotation_full(schedule.post_phase) * m;
}

Symplectic4d replay(const GateSchedule &schedule) {
  return replay(schedule, schedule.native());
}

double CovarianceState::uncertainty_margin() const {
  const Eigen::Matrix4cd h =
      sigma.cast<std::complex<double>>() +
      std::complex<double>(0, 0.5) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

CovarianceState evolve_gaussian(const CovarianceState &state,
                                const Symplectic4d &m) {
  CovarianceState out;
  out.sigma = m * state.sigma * m.transpose();
  // keep exact symmetry against rounding
  out.sigma = 0.5 * (out.sigma + out.sigma.transpose()).eval();
  return out;
}

namespace {

Block2d generator_block(const CouplingClass &cls, Generator g) {
  const double c2 = cls.normalized_c2();
  Block2d m;
  if (g == Generator::H1)
    m << 0, c2, 1, 0;
  else
    m << 0, 1, c2, 0;
  return m;
}

Generator step_generator(int k) { return k % 2 == 0 ? Generator::H1 : Generator::H2; }

struct Evaluation {
  Eigen::Vector4d residual;
  Eigen::Matrix<double, 4, Eigen::Dynamic> jacobian;
};

Evaluation evaluate(const Eigen::VectorXd &t, const Block2d &target,
                    const CouplingClass &cls) {
  const int n = static_cast<int>(t.size());
  std::vector<Block2d> factors(n);
  for (int k = 0; k < n; ++k)
    factors[k] = propagator_for(cls, step_generator(k), t(k));

  // prefix[k] = P_{k-1} ... P_0, suffix[k] = P_{n-1} ... P_{k+1}
  std::vector<Block2d> prefix(n + 1), suffix(n + 1);
  prefix[0].setIdentity();
  for (int k = 0; k < n; ++k) prefix[k + 1] = factors[k] * prefix[k];
  suffix[n - 1].setIdentity();
  for (int k = n - 1; k > 0; --k) suffix[k - 1] = suffix[k] * factors[k];

  Evaluation e;
  const Block2d product = prefix[n];
  const Block2d diff = product - target;
  e.residual = Eigen::Map<const Eigen::Vector4d>(diff.data());
  e.jacobian.resize(4, n);
  for (int k = 0; k < n; ++k) {
    // d/dt_k exp(M t_k) = M exp(M t_k)
    const Block2d d =
        suffix[k] * generator_block(cls, step_generator(k)) * factors[k] * prefix[k];
    e.jacobian.col(k) = Eigen::Map<const Eigen::Vector4d>(d.data());
  }
  return e;
}

// Damped Gauss-Newton from one start, projected onto the search box.
Eigen::VectorXd solve_from(Eigen::VectorXd t, const Block2d &target,
                           const CouplingClass &cls,
                           const BruteForceOptions &options) {
  const double box = options.max_abs_time;
  auto project = [box](Eigen::VectorXd v) { return v.cwiseMax(-box).cwiseMin(box).eval(); };
  Evaluation e = evaluate(t, target, cls);
  double f = 0.5 * e.residual.squaredNorm();
  for (int it = 0; it < options.max_iterations; ++it) {
    if (e.residual.cwiseAbs().maxCoeff() < 1e-15) break;
    const Eigen::VectorXd gradient = e.jacobian.transpose() * e.residual;
    Eigen::VectorXd step =
        -e.jacobian.completeOrthogonalDecomposition().solve(e.residual);
    double slope = gradient.dot(step);
    if (!step.allFinite() || slope >= 0) {
      step = -gradient;
      slope = -gradient.squaredNorm();
    }
    double lambda = 1;
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls, lambda *= 0.5) {
      const Eigen::VectorXd trial = project(t + lambda * step);
      const Evaluation et = evaluate(trial, target, cls);
      const double ft = 0.5 * et.residual.squaredNorm();
      // Armijo condition; the plain decrease test covers projected steps
      if (ft <= f + 1e-4 * lambda * slope || (ft < f && trial != t + lambda * step)) {
        t = trial;
        e = et;
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return t;
}

bool lexicographically_less(const Eigen::VectorXd &a, const Eigen::VectorXd &b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

DecompositionParams to_params(const Eigen::VectorXd &t, const CouplingClass &cls) {
  DecompositionParams p{{}, cls};
  for (int k = 0; k < t.size(); ++k) p.steps.push_back({step_generator(k), t(k)});
  return p;
}

}  // namespace

BruteForceResult brute_force_params(const Block2d &target,
                                    const CouplingClass &cls, int n_steps,
                                    const BruteForceOptions &options) {
  if (n_steps < 1 || n_steps > 6)
    throw SynthesisError(ErrorKind::OutOfRange, "n_steps must lie in [1, 6]");
  if (!target.allFinite() || std::abs(target.determinant() - 1) > 1e-9)
    throw SynthesisError(ErrorKind::OutOfRange, "target must have unit determinant");

  struct Candidate {
    Eigen::VectorXd t;
    double residual;
    double time;
  };
  std::vector<Candidate> candidates;
  for (int k = 0; k < options.starts; ++k) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(k));
    std::uniform_real_distribution<double> dist(-options.start_range,
                                                options.start_range);
    Eigen::VectorXd start(n_steps);
    for (int i = 0; i < n_steps; ++i) start(i) = dist(rng);
    const Eigen::VectorXd t = solve_from(start, target, cls, options);
    const double res = evaluate(t, target, cls).residual.cwiseAbs().maxCoeff();
    candidates.push_back({t, res, t.cwiseAbs().sum()});
  }

  BruteForceResult out;
  std::vector<const Candidate *> converged;
  for (const auto &c : candidates)
    if (c.residual < options.solution_tol) converged.push_back(&c);
  out.converged = !converged.empty();

  const Candidate *best = nullptr;
  if (out.converged) {
    std::sort(converged.begin(), converged.end(),
              [](const Candidate *a, const Candidate *b) {
                if (a->time != b->time) return a->time < b->time;
                return lexicographically_less(a->t, b->t);
              });
    best = converged.front();
    for (const Candidate *c : converged) {
      bool seen = false;
      for (const auto &s : out.solutions) {
        Eigen::VectorXd v(n_steps);
        for (int i = 0; i < n_steps; ++i) v(i) = s.steps[i].time;
        if ((v - c->t).cwiseAbs().maxCoeff() < 1e-6) seen = true;
      }
      if (!seen) out.solutions.push_back(to_params(c->t, cls));
    }
  } else {
    for (const auto &c : candidates)
      if (!best || c.residual < best->residual ||
          (c.residual == best->residual && lexicographically_less(c.t, best->t)))
        best = &c;
  }
  out.params = to_params(best->t, cls);
  out.residual = best->residual;
  return out;
}

VerificationReport verify(const GateSchedule &schedule,
                          const CouplingMatrix &native,
                          const TargetGate &target, double tol) {
  VerificationReport report;
  report.tolerance = tol;
  try {
    const CouplingClass cls = classify(canonical_form(native));
    if (!schedule.steps.empty() && !cls.equivalent_to(schedule.cls, 1e-9)) {
      report.max_entry_error = std::numeric_limits<double>::infinity();
      report.symplectic_defect = std::numeric_limits<double>::infinity();
      return report;
    }
    Symplectic4d m = Symplectic4d::Identity();
    for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
      const auto &step = schedule.steps[i];
      m = propagator_full(native, step.duration) *
          phase_rotation_full(step.pre_phase) * m;
      report.steps.push_back(
          {i, step.pre_phase, step.duration, symplectic_defect(m)});
    }
    m = phase_rotation_full(schedule.post_phase) * m;
    const Symplectic4d expected = lift_full(target.block());
    report.max_entry_error = (m - expected).cwiseAbs().maxCoeff();
    report.symplectic_defect = symplectic_defect(m);
  } catch (const SynthesisError &) {
    report.max_entry_error = std::numeric_limits<double>::infinity();
    report.symplectic_defect = std::numeric_limits<double>::infinity();
  }
  report.pass = report.max_entry_error < tol && report.symplectic_defect < tol;
  return report;
}

VerificationReport verify(const GateSchedule &schedule, double tol) {
  return verify(schedule, schedule.native(), schedule.target, tol);
}

}  // namespace cvgate
