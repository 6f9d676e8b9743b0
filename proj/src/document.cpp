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

#include "cvgate/document.hpp"

#include <cmath>

#include "cvgate/canonical.hpp"

namespace cvgate {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string &what) {
  throw SynthesisError(ErrorKind::MalformedDocument, what);
}

json phase_json(const PhaseShiftPair &ph) {
  return {{"phiA", ph.phiA}, {"phiB", ph.phiB}};
}

double number(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
    malformed(std::string("missing numeric field '") + key + "'");
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) malformed(std::string("non-finite field '") + key + "'");
  return v;
}

PhaseShiftPair phase_from_json(const json &j) {
  return {number(j, "phiA"), number(j, "phiB")};
}

}  // namespace

json to_json(const TargetGate &target) {
  if (auto *bs = std::get_if<BeamSplitter>(&target.gate))
    return {{"kind", "bs"}, {"phi", bs->phi}};
  if (auto *tms = std::get_if<TwoModeSqueezer>(&target.gate))
    return {{"kind", "tms"}, {"r", tms->r}};
  if (auto *sms = std::get_if<SingleModeSqueezer>(&target.gate))
    return {{"kind", "sms"}, {"r", sms->r}};
  const Block2d &b = std::get<CustomGate>(target.gate).block;
  return {{"kind", "custom"}, {"block", {b(0, 0), b(0, 1), b(1, 0), b(1, 1)}}};
}

TargetGate target_from_json(const json &j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    malformed("target needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "bs") return TargetGate::beam_splitter(number(j, "phi"));
    if (kind == "tms") return TargetGate::two_mode_squeezer(number(j, "r"));
    if (kind == "sms") return TargetGate::single_mode_squeezer(number(j, "r"));
    if (kind == "custom") {
      const json &b = j.contains("block") ? j.at("block") : json();
      if (!b.is_array() || b.size() != 4) malformed("custom target needs a 4-entry 'block'");
      Block2d m;
      for (int i = 0; i < 4; ++i) {
        if (!b.at(i).is_number()) malformed("custom block entries must be numbers");
        m(i / 2, i % 2) = b.at(i).get<double>();
      }
      return TargetGate::custom(m);
    }
  } catch (const SynthesisError &e) {
    if (e.kind() == ErrorKind::MalformedDocument) throw;
    malformed(std::string("invalid target: ") + e.what());
  }
  malformed("unknown target kind '" + kind + "'");
}

json to_json(const CanonicalHamiltonian &h, const CouplingClass &cls) {
  json j = {{"c1", h.c1},
            {"c2", h.c2},
            {"rotA", h.rotation.phiA},
            {"rotB", h.rotation.phiB},
            {"class", std::string(to_string(cls.kind))},
            {"sign_degenerate", h.sign_degenerate}};
  if (cls.kind != CouplingKind::XP) j["s"] = cls.s;
  if (cls.tms_degenerate) j["tms_degenerate"] = true;
  return j;
}

json to_json(const ScheduleDocument &doc) {
  const GateSchedule &s = doc.schedule;
  json j;
  j["version"] = kDocumentVersion;
  if (s.native_coupling) {
    const Eigen::Matrix2d &c = *s.native_coupling;
    j["hamiltonian"] = {{"c11", c(0, 0)}, {"c12", c(0, 1)}, {"c21", c(1, 0)}, {"c22", c(1, 1)}};
  } else {
    j["hamiltonian"] = {{"c1", s.hamiltonian.c1}, {"c2", s.hamiltonian.c2}};
  }
  j["target"] = to_json(s.target);
  json steps = json::array();
  for (const auto &step : s.steps)
    steps.push_back({{"phiA", step.pre_phase.phiA},
                     {"phiB", step.pre_phase.phiB},
                     {"duration", step.duration}});
  j["steps"] = steps;
  j["post_phase"] = phase_json(s.post_phase);
  if (s.canonicalization_phase)
    j["canonicalization_phase"] = phase_json(*s.canonicalization_phase);
  j["total_time"] = s.total_time;

  json meta = {{"tool_version", doc.metadata.tool_version},
               {"tolerance", doc.metadata.tolerance},
               {"coupling_class", std::string(to_string(s.cls.kind))},
               {"n_blocks", s.n_blocks},
               {"fused", s.fused}};
  if (s.cls.kind != CouplingKind::XP) meta["s"] = s.cls.s;
  if (doc.metadata.kappa) meta["kappa"] = *doc.metadata.kappa;
  j["metadata"] = meta;
  return j;
}

ScheduleDocument document_from_json(const json &j) {
  if (!j.is_object()) malformed("document must be a JSON object");
  if (!j.contains("version") || !j.at("version").is_number_integer() ||
      j.at("version").get<int>() != kDocumentVersion)
    malformed("unsupported or missing document version");

  ScheduleDocument doc;
  GateSchedule &s = doc.schedule;

  if (!j.contains("hamiltonian")) malformed("missing 'hamiltonian'");
  const json &h = j.at("hamiltonian");
  try {
    if (h.is_object() && h.contains("c11")) {
      const CouplingMatrix c(number(h, "c11"), number(h, "c12"), number(h, "c21"),
                             number(h, "c22"));
      s.native_coupling = c.matrix();
      s.hamiltonian = canonical_form(c);
    } else {
      s.hamiltonian.c1 = number(h, "c1");
      s.hamiltonian.c2 = number(h, "c2");
    }
    s.cls = classify(s.hamiltonian);
  } catch (const SynthesisError &e) {
    if (e.kind() == ErrorKind::MalformedDocument) throw;
    malformed(std::string("invalid hamiltonian: ") + e.what());
  }

  if (!j.contains("target")) malformed("missing 'target'");
  s.target = target_from_json(j.at("target"));

  if (!j.contains("steps") || !j.at("steps").is_array()) malformed("missing 'steps' array");
  for (const json &step : j.at("steps")) {
    const double duration = number(step, "duration");
    if (duration < 0) malformed("negative step duration");
    s.steps.push_back({phase_from_json(step), duration});
  }
  if (!j.contains("post_phase")) malformed("missing 'post_phase'");
  s.post_phase = phase_from_json(j.at("post_phase"));
  if (j.contains("canonicalization_phase"))
    s.canonicalization_phase = phase_from_json(j.at("canonicalization_phase"));
  s.total_time = number(j, "total_time");

  if (!j.contains("metadata") || !j.at("metadata").is_object())
    malformed("missing 'metadata'");
  const json &meta = j.at("metadata");
  try {
    doc.metadata.tool_version = meta.value("tool_version", std::string(kToolVersion));
    doc.metadata.tolerance = meta.value("tolerance", kDefaultTolerance);
    if (meta.contains("kappa")) doc.metadata.kappa = number(meta, "kappa");
    s.n_blocks = meta.value("n_blocks", 1);
    s.fused = meta.value("fused", true);
  } catch (const json::exception &e) {
    malformed(std::string("bad metadata: ") + e.what());
  }
  return doc;
}

std::string emit_document(const ScheduleDocument &doc) {
  return to_json(doc).dump(2) + "\n";
}

ScheduleDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::exception &e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

json to_json(const VerificationReport &report) {
  json steps = json::array();
  for (const auto &s : report.steps)
    steps.push_back({{"index", s.index},
                     {"phiA", s.pre_phase.phiA},
                     {"phiB", s.pre_phase.phiB},
                     {"duration", s.duration},
                     {"symplectic_defect", s.symplectic_defect}});
  auto finite_or_null = [](double v) -> json {
    return std::isfinite(v) ? json(v) : json(nullptr);
  };
  return {{"max_entry_error", finite_or_null(report.max_entry_error)},
          {"symplectic_defect", finite_or_null(report.symplectic_defect)},
          {"tolerance", report.tolerance},
          {"steps", steps},
          {"pass", report.pass}};
}

}  // namespace cvgate
