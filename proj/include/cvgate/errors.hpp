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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cvgate {

/// Failure categories raised by the synthesis stack. The names returned by
/// error_name() are printed verbatim by the command-line tool.
enum class ErrorKind {
  InvalidCoupling,
  WrongClass,
  Singular,
  PoleAngle,
  ZeroAlpha,
  NonPositiveR,
  Degenerate,
  OutOfRange,
  AboveThreshold,
  ClassMismatch,
  NoConvergence,
  MalformedDocument,
};

std::string_view error_name(ErrorKind kind);

class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace cvgate
