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


// Acceptance checks. Prints one PASS/FAIL line per criterion; an optional
// argument selects a single criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "cvgate/canonical.hpp"
#include "cvgate/scheduler.hpp"
#include "cvgate/synthesis_generic.hpp"
#include "cvgate/synthesis_xp.hpp"
#include "cvgate/verify.hpp"
#include "json.hpp"

using namespace cvgate;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char *title;
  std::function<Outcome()> run;
};

template <typename A, typename B>
double diff(const Eigen::MatrixBase<A> &a, const Eigen::MatrixBase<B> &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CanonicalHamiltonian canon(double c1, double c2) {
  CanonicalHamiltonian h;
  h.c1 = c1;
  h.c2 = c2;
  return h;
}

double replay_error(const GateSchedule &s) {
  return diff(replay(s), lift_full(s.target.block()));
}

Outcome swap_gate() {
  const auto p = synth_bs_xp(kPi / 2);
  const bool exact = p.steps[0].time == -1 && p.steps[1].time == 1 &&
                     p.steps[2].time == -1;
  const double err = replay_error(synthesize(TargetGate::beam_splitter(kPi / 2), canon(1, 0)));
  Outcome o{exact && err < 1e-12, ""};
  o.detail = "times (" + fmt("%.17g", p.steps[0].time) + ", " + fmt("%.17g", p.steps[1].time) +
             ", " + fmt("%.17g", p.steps[2].time) + "), replay error " + fmt("%.2e", err);
  return o;
}

Outcome balanced_bs() {
  const auto p = synth_bs_xp(kPi / 4);
  const double a = 1 - std::sqrt(2.0), b = std::sqrt(2.0) / 2;
  const double rel = std::max({std::abs(p.steps[0].time - a) / std::abs(a),
                               std::abs(p.steps[2].time - a) / std::abs(a),
                               std::abs(p.steps[1].time - b) / b});
  const double err = replay_error(synthesize(TargetGate::beam_splitter(kPi / 4), canon(1, 0)));
  return {rel <= 1e-15 && err < 1e-12,
          "relative parameter error " + fmt("%.2e", rel) + ", replay error " + fmt("%.2e", err)};
}

Outcome tms_closed_form() {
  double worst_param = 0, worst = 0;
  for (double r : {0.1, 1.0, 3.0}) {
    const auto p = synth_tms_xp(r);
    worst_param = std::max({worst_param, std::abs(p.steps[0].time - std::tanh(r / 2)),
                            std::abs(p.steps[1].time - std::sinh(r))});
    worst = std::max(worst, diff(compose(p), two_mode_squeezer_block(r)));
  }
  return {worst_param <= 1e-15 && worst < 1e-11,
          "parameter error " + fmt("%.2e", worst_param) + ", product error " + fmt("%.2e", worst)};
}

double sms_time(double r, double a) { return synth_sms_xp(r, a).total_time(); }

Outcome sms_optimality() {
  const double r = 1, a = optimal_alpha_sms(r), t = sms_time(r, a);
  double slack = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const double ap = 0.1 * a + (9.9 * a) * i / 999.0;
    slack = std::min(slack, sms_time(r, ap) - t);
  }
  const double h = 1e-5 * a;
  const double d = (sms_time(r, a + h) - sms_time(r, a - h)) / (2 * h);
  return {slack >= -1e-9 && std::abs(d) < 1e-6 * t,
          "min T(a') - T(a*) = " + fmt("%.2e", slack) + ", |dT/da| / T = " + fmt("%.2e", std::abs(d) / t)};
}

Outcome sms_scaling() {
  auto ratio = [](double r) {
    double m = 0;
    for (const auto &s : synth_sms_xp(r).steps) m = std::max(m, std::abs(s.time));
    return m / std::sqrt(r);
  };
  const double a = ratio(1e-3), b = ratio(1e-4);
  const double var = std::abs(a - b) / b;
  return {var < 0.05, "max|t|/sqrt(r): " + fmt("%.6f", a) + " vs " + fmt("%.6f", b)};
}

Outcome amp_asymptote() {
  const auto d = synth_tms_amp(20, 2);
  const double dev = std::abs(std::tanh(d.alpha) - 1 / 3.5);
  bool mono = true;
  double prev = -1;
  for (int i = 0; i < 50; ++i) {
    const double b = synth_tms_amp(0.1 + 19.9 * i / 49, 2).beta;
    mono = mono && b > prev;
    prev = b;
  }
  return {dev < 1e-6 && mono,
          "|tanh a - 1/3.5| = " + fmt("%.2e", dev) + (mono ? ", beta increasing" : ", beta NOT increasing")};
}

Outcome osc_threshold() {
  const double rth = r_threshold(2);
  const double dev = std::abs(rth - std::acosh(std::sqrt(3.25)));
  bool below = true, above = false;
  try {
    synth_tms_osc(rth - 1e-6, 2);
  } catch (const SynthesisError &) {
    below = false;
  }
  try {
    synth_tms_osc(rth + 1e-6, 2);
  } catch (const SynthesisError &e) {
    above = e.kind() == ErrorKind::AboveThreshold;
  }
  const auto s = schedule_tms_above_threshold(2 * rth, 2.0);
  const double err = replay_error(s);
  return {dev < 1e-12 && below && above && err < 1e-9,
          "r_th = " + fmt("%.15f", rth) + ", " + std::to_string(s.n_blocks) +
              " blocks at 2 r_th, replay error " + fmt("%.2e", err)};
}

Outcome phase_table() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double c1 = 0.1 + 2.9 * u(rng), c2 = c1 * (2 * u(rng) - 1);
    const CouplingMatrix h(0, c1, c2, 0);
    Eigen::Matrix2d h2;
    h2 << 0, c2, c1, 0;
    const Eigen::Matrix2d h1 = h.matrix();
    worst = std::max({worst, diff(conjugate_hamiltonian(h, {0, 0}).matrix(), h1),
                      diff(conjugate_hamiltonian(h, {kPi / 2, 3 * kPi / 2}).matrix(), h2),
                      diff(conjugate_hamiltonian(h, {kPi, 0}).matrix(), Eigen::Matrix2d(-h1)),
                      diff(conjugate_hamiltonian(h, {kPi / 2, kPi / 2}).matrix(), Eigen::Matrix2d(-h2))});
  }
  return {worst < 1e-12, "max error " + fmt("%.2e", worst)};
}

Outcome canonical_sign() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  int order_bad = 0, sign_checked = 0, sign_bad = 0;
  for (int i = 0; i < 500; ++i) {
    Eigen::Matrix2d m;
    m << u(rng), u(rng), u(rng), u(rng);
    const CouplingMatrix c(m);
    const auto h = canonical_form(c);
    worst = std::max(worst, diff(conjugate_hamiltonian(c, h.rotation).matrix(),
                                 h.coupling().matrix()));
    if (h.c1 < std::abs(h.c2)) ++order_bad;
    const double det = c.determinant();
    if (std::abs(det) > 1e-12) {
      ++sign_checked;
      if ((h.c2 > 0) != (det > 0)) ++sign_bad;
    }
  }
  return {worst < 1e-10 && order_bad == 0 && sign_bad == 0,
          "reconstruction " + fmt("%.2e", worst) + ", c1 < |c2| in " + std::to_string(order_bad) +
              ", sign(c2) != sign(det C) in " + std::to_string(sign_bad) + "/" +
              std::to_string(sign_checked) + " (phase rotations preserve det C = -c1 c2)"};
}

// Oscillatory propagators satisfy P(t + pi/s) = -P(t), so solutions are only
// isolated modulo half periods with an even total shift.
bool same_solution(const DecompositionParams &a, const DecompositionParams &b, double tol) {
  const bool periodic = a.cls.kind == CouplingKind::BeamSplitterLike;
  const double half = periodic ? kPi / a.cls.s : 0;
  long shifts = 0;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    double d = a.steps[i].time - b.steps[i].time;
    if (periodic) {
      const double k = std::round(d / half);
      shifts += static_cast<long>(k);
      d -= k * half;
    }
    if (std::abs(d) >= tol) return false;
  }
  return shifts % 2 == 0;
}

bool contains(const BruteForceResult &res, const DecompositionParams &p, double tol) {
  for (const auto &s : res.solutions)
    if (same_solution(s, p, tol)) return true;
  return false;
}

Outcome oracle_cross_check() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0, 1);
  int matched = 0;
  for (int i = 0; i < 50; ++i) {
    const int family = i % 3;
    const bool bs = (i / 3) % 2 == 0;
    const double s = 0.5 + 1.5 * u(rng);
    const double s_safe = std::abs(s - 1) < 0.1 ? 1.5 : s;
    Block2d target;
    DecompositionParams closed;
    CouplingClass cls = CouplingClass::xp();
    if (bs) {
      const double phi = 0.1 + 1.4 * u(rng);
      target = beam_splitter_block(phi);
      if (family == 0) closed = synth_bs_xp(phi);
      if (family == 1) closed = synth_bs_amp(phi, s_safe).params();
      if (family == 2) closed = synth_bs_osc(phi, s_safe).params();
    } else {
      const double r = 0.1 + 0.8 * u(rng);
      target = two_mode_squeezer_block(r);
      if (family == 0) closed = synth_tms_xp(r);
      if (family == 1) closed = synth_tms_amp(r, s_safe).params();
      if (family == 2) closed = synth_tms_osc(std::min(r, 0.9 * r_threshold(s_safe)), s_safe).params();
      if (family == 2) target = compose(closed);
    }
    if (family != 0) cls = closed.cls;
    if (contains(brute_force_params(target, cls, 3), closed, 1e-5)) ++matched;
  }
  const auto three = brute_force_params(single_mode_squeezer_block(1.0), CouplingClass::xp(), 3);
  const auto four = brute_force_params(single_mode_squeezer_block(1.0), CouplingClass::xp(), 4);
  return {matched == 50 && three.residual >= 0.1 && four.residual < 1e-10,
          std::to_string(matched) + "/50 closed forms recovered, 3-step residual " +
              fmt("%.3f", three.residual) + ", 4-step residual " + fmt("%.2e", four.residual)};
}

Outcome gaussian_suite() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int i = 0; i < 300; ++i) {
    const double c2 = i % 3 == 0 ? 0.0 : (i % 3 == 1 ? 1 : -1) * (0.05 + 0.9 * u(rng));
    const TargetGate t = i % 2 ? TargetGate::beam_splitter(6 * u(rng) - 3)
                               : TargetGate::two_mode_squeezer(3 * u(rng) - 1.5);
    worst = std::max(worst, symplectic_defect(replay(synthesize(t, canon(1, c2)))));
  }
  const auto out = evolve_gaussian(CovarianceState::vacuum(),
                                   replay(synthesize(TargetGate::two_mode_squeezer(1), canon(1, 0))));
  const Eigen::Vector4d w(1, -1, 0, 0);
  const double ratio = out.variance(w) / CovarianceState::vacuum().variance(w);
  const double rel = std::abs(ratio / std::exp(-2.0) - 1);
  return {worst < 1e-10 && rel < 1e-9,
          "max defect " + fmt("%.2e", worst) + ", var ratio " + fmt("%.12f", ratio)};
}

Outcome cli_round_trip() {
  using testing::run_cli;
  const std::vector<std::string> couplings = {
      "--canonical 1,0", "--canonical 2,0.5", "--canonical 1,-0.25",
      "--hamiltonian 0.3,1.1,-0.7,0.2", "--hamiltonian 1,0.4,0.2,-0.5"};
  const std::vector<std::string> targets = {"bs:0.5", "bs:2.5", "tms:0.8", "tms:-1.2"};
  int ok = 0, total = 0;
  std::string first_failure;
  const std::string path = (testing::scratch_dir() / "acceptance.json").string();
  for (const auto &c : couplings)
    for (const auto &t : targets) {
      ++total;
      const auto syn = run_cli("synthesize " + c + " --target " + t + " --out " + path);
      const auto ver = syn.code == 0 ? run_cli("verify --schedule " + path) : testing::RunResult{};
      if (syn.code == 0 && ver.code == 0)
        ++ok;
      else if (first_failure.empty())
        first_failure = ", first failure: " + c + " " + t;
    }
  const auto deg = run_cli("synthesize --canonical 1,1 --target tms:1");
  return {ok == total && total == 20 && deg.code == 2,
          std::to_string(ok) + "/" + std::to_string(total) +
              " round trips, degenerate exit " + std::to_string(deg.code) + first_failure};
}

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria = {
      {1, "swap gate", swap_gate},
      {2, "balanced beam splitter", balanced_bs},
      {3, "two-mode squeezer closed form", tms_closed_form},
      {4, "single-mode squeezer optimal alpha", sms_optimality},
      {5, "single-mode squeezer small-r scaling", sms_scaling},
      {6, "amplifier squeezer asymptote", amp_asymptote},
      {7, "oscillatory threshold", osc_threshold},
      {8, "phase-shift table", phase_table},
      {9, "canonical form", canonical_sign},
      {10, "oracle cross-check", oracle_cross_check},
      {11, "symplectic and Gaussian suite", gaussian_suite},
      {12, "end-to-end CLI", cli_round_trip},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (const auto &c : criteria) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
