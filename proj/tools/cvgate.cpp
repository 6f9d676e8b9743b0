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

// cvgate: synthesize, verify, canonicalize and sweep two-mode gate schedules.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 domain error (the error name is printed on stderr), 3 I/O or format error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cvgate/canonical.hpp"
#include "cvgate/document.hpp"
#include "cvgate/scheduler.hpp"
#include "cvgate/sweep.hpp"
#include "cvgate/verify.hpp"

namespace {

using namespace cvgate;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitFormat = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(const std::string &text, std::size_t expected,
                                  const std::string &flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v))
      throw SynthesisError(ErrorKind::OutOfRange,
                           flag + ": '" + item + "' is not a finite number");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw SynthesisError(ErrorKind::OutOfRange,
                         flag + " expects " + std::to_string(expected) +
                             " comma-separated numbers");
  return out;
}

TargetGate parse_target(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw SynthesisError(ErrorKind::OutOfRange,
                         "--target must look like bs:<phi>, tms:<r>, sms:<r> "
                         "or custom:<s11,s12,s21,s22>");
  const std::string kind = text.substr(0, colon);
  const std::string value = text.substr(colon + 1);
  if (kind == "bs") return TargetGate::beam_splitter(parse_numbers(value, 1, "--target")[0]);
  if (kind == "tms")
    return TargetGate::two_mode_squeezer(parse_numbers(value, 1, "--target")[0]);
  if (kind == "sms")
    return TargetGate::single_mode_squeezer(parse_numbers(value, 1, "--target")[0]);
  if (kind == "custom") {
    const auto v = parse_numbers(value, 4, "--target");
    Block2d m;
    m << v[0], v[1], v[2], v[3];
    return TargetGate::custom(m);
  }
  throw SynthesisError(ErrorKind::OutOfRange, "unknown target kind '" + kind + "'");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

void warn_if_near_degenerate(const CouplingClass &cls) {
  if (cls.kind != CouplingKind::XP && std::abs(cls.s - 1) < kNearDegenerateBand &&
      cls.s != 1)
    std::cerr << "warning: |s - 1| < " << kNearDegenerateBand
              << ": interaction times grow like 1/|s - 1|\n";
}

struct SynthesizeArgs {
  std::string hamiltonian;
  std::string canonical;
  std::string target;
  std::string out;
  double margin = kDefaultMargin;
  bool no_fuse = false;
  bool no_concat = false;
  int split = 1;
  std::optional<double> alpha;
  std::optional<double> kappa;
  double tol = kDefaultTolerance;
};

int run_synthesize(const SynthesizeArgs &a) {
  SynthesisOptions options;
  options.margin = a.margin;
  options.schedule.fuse = !a.no_fuse;
  options.allow_concatenation = !a.no_concat;
  options.tms_split = a.split;
  options.sms_alpha = a.alpha;
  options.tol = a.tol;

  const TargetGate target = parse_target(a.target);
  ScheduleDocument doc;
  if (!a.hamiltonian.empty()) {
    const auto c = parse_numbers(a.hamiltonian, 4, "--hamiltonian");
    doc.schedule = synthesize(target, CouplingMatrix(c[0], c[1], c[2], c[3]), options);
  } else {
    const auto c = parse_numbers(a.canonical, 2, "--canonical");
    CanonicalHamiltonian h;
    h.c1 = c[0];
    h.c2 = c[1];
    classify(h, a.tol);
    doc.schedule = synthesize(target, h, options);
  }
  warn_if_near_degenerate(doc.schedule.cls);
  doc.metadata.tolerance = a.tol;
  doc.metadata.kappa = a.kappa;
  write_output(a.out, emit_document(doc));
  return 0;
}

int run_verify(const std::string &path, double tol) {
  const ScheduleDocument doc = parse_document(read_file(path));
  const VerificationReport report = verify(doc.schedule, tol);
  std::cout << to_json(report).dump(2) << '\n';
  return report.pass ? 0 : kExitVerifyFailed;
}

int run_canonicalize(const std::string &hamiltonian, double tol) {
  const auto c = parse_numbers(hamiltonian, 4, "--hamiltonian");
  const CouplingMatrix coupling(c[0], c[1], c[2], c[3]);
  const CanonicalHamiltonian h = canonical_form(coupling, tol);
  std::cout << to_json(h, classify(h, tol)).dump(2) << '\n';
  return 0;
}

struct SweepArgs {
  std::string target = "tms";
  std::string family = "amplifier";
  std::string r_range;
  std::string s_range = "2";
  std::string out;
  double margin = kDefaultMargin;
};

int run_sweep(const SweepArgs &a) {
  SweepTarget target;
  if (a.target == "tms")
    target = SweepTarget::TwoModeSqueezer;
  else if (a.target == "bs")
    target = SweepTarget::BeamSplitter;
  else
    throw SynthesisError(ErrorKind::OutOfRange, "sweep target must be tms or bs");
  CouplingKind family;
  if (a.family == "xp")
    family = CouplingKind::XP;
  else if (a.family == "amplifier")
    family = CouplingKind::AmplifierLike;
  else if (a.family == "beam_splitter")
    family = CouplingKind::BeamSplitterLike;
  else
    throw SynthesisError(ErrorKind::OutOfRange,
                         "--family must be xp, amplifier or beam_splitter");
  const auto rows = sweep(target, family, GridRange::parse(a.r_range).values(),
                          GridRange::parse(a.s_range).values(), a.margin);
  write_output(a.out, to_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-mode continuous-variable gate synthesis under a fixed "
               "quadratic coupling"};
  app.require_subcommand(1);

  SynthesizeArgs synth;
  auto *cmd_synth = app.add_subcommand("synthesize", "Emit a schedule document");
  auto *opt_h = cmd_synth->add_option("--hamiltonian", synth.hamiltonian,
                                      "Native coupling c11,c12,c21,c22");
  auto *opt_c = cmd_synth->add_option("--canonical", synth.canonical,
                                      "Native canonical coupling c1,c2");
  opt_h->excludes(opt_c);
  cmd_synth->add_option("--target", synth.target,
                        "bs:<phi> | tms:<r> | sms:<r> | custom:<s11,s12,s21,s22>")
      ->required();
  cmd_synth->add_option("--out", synth.out, "Output path (default stdout)");
  cmd_synth->add_option("--margin", synth.margin,
                        "Safety margin below the squeezing threshold");
  cmd_synth->add_flag("--no-fuse", synth.no_fuse, "Keep every phase shift explicit");
  cmd_synth->add_flag("--no-concat", synth.no_concat,
                      "Fail instead of concatenating above threshold");
  cmd_synth->add_option("--split", synth.split,
                        "Split an XP two-mode squeezer into n blocks");
  cmd_synth->add_option("--alpha", synth.alpha, "Free parameter of the XP squeezer");
  cmd_synth->add_option("--kappa", synth.kappa, "Physical coupling scale (metadata)");
  cmd_synth->add_option("--tol", synth.tol, "Numerical tolerance");

  std::string schedule_path;
  double verify_tol = 1e-9;
  auto *cmd_verify = app.add_subcommand("verify", "Replay a schedule document");
  cmd_verify->add_option("--schedule", schedule_path, "Schedule document")->required();
  cmd_verify->add_option("--tol", verify_tol, "Max-entry tolerance");

  std::string canon_hamiltonian;
  double canon_tol = kDefaultTolerance;
  auto *cmd_canon = app.add_subcommand("canonicalize", "Canonical form of a coupling");
  cmd_canon->add_option("--hamiltonian", canon_hamiltonian, "c11,c12,c21,c22")
      ->required();
  cmd_canon->add_option("--tol", canon_tol, "Numerical tolerance");

  SweepArgs sw;
  auto *cmd_sweep = app.add_subcommand("sweep", "Tabulate interaction times as CSV");
  cmd_sweep->add_option("--target", sw.target, "tms or bs");
  cmd_sweep->add_option("--family", sw.family, "xp, amplifier or beam_splitter");
  cmd_sweep->add_option("--r-range,--phi-range", sw.r_range,
                        "start:stop:count of r (tms) or phi (bs)")
      ->required();
  cmd_sweep->add_option("--s-range", sw.s_range, "start:stop:count or a value");
  cmd_sweep->add_option("--margin", sw.margin, "Threshold margin");
  cmd_sweep->add_option("--out", sw.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFormat;
  }

  try {
    if (*cmd_synth) {
      if (synth.hamiltonian.empty() && synth.canonical.empty()) {
        std::cerr << "synthesize needs --hamiltonian or --canonical\n";
        return kExitFormat;
      }
      return run_synthesize(synth);
    }
    if (*cmd_verify) return run_verify(schedule_path, verify_tol);
    if (*cmd_canon) return run_canonicalize(canon_hamiltonian, canon_tol);
    if (*cmd_sweep) return run_sweep(sw);
  } catch (const SynthesisError &e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::MalformedDocument ? kExitFormat : kExitDomain;
  } catch (const IoError &e) {
    std::cerr << "IOError: " << e.what() << '\n';
    return kExitFormat;
  }
  return kExitFormat;
}
