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

// JSON schedule document (schema version 1) and JSON renderings of the
// verification report and canonical form.

#include <optional>
#include <string>
#include <string_view>

#include "cvgate/scheduler.hpp"
#include "cvgate/verify.hpp"
#include "json.hpp"

namespace cvgate {

inline constexpr int kDocumentVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

struct DocumentMetadata {
  std::string tool_version{kToolVersion};
  double tolerance = kDefaultTolerance;
  /// Physical coupling scale, recorded only; durations stay in units of 1/c1.
  std::optional<double> kappa;
};

struct ScheduleDocument {
  GateSchedule schedule;
  DocumentMetadata metadata;
};

nlohmann::json to_json(const ScheduleDocument &doc);

/// Throws SynthesisError(MalformedDocument) on schema violations.
ScheduleDocument document_from_json(const nlohmann::json &j);

/// Pretty-printed document with a trailing newline. Doubles use the shortest
/// representation that parses back to the same value.
std::string emit_document(const ScheduleDocument &doc);

/// Throws SynthesisError(MalformedDocument) on invalid JSON or schema.
ScheduleDocument parse_document(std::string_view text);

nlohmann::json to_json(const VerificationReport &report);
nlohmann::json to_json(const CanonicalHamiltonian &h, const CouplingClass &cls);
nlohmann::json to_json(const TargetGate &target);
TargetGate target_from_json(const nlohmann::json &j);

}  // namespace cvgate
