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

#include "cvgate/errors.hpp"

namespace cvgate {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCoupling:
      return "InvalidCoupling";
    case ErrorKind::WrongClass:
      return "WrongClass";
    case ErrorKind::Singular:
      return "Singular";
    case ErrorKind::PoleAngle:
      return "PoleAngle";
    case ErrorKind::ZeroAlpha:
      return "ZeroAlpha";
    case ErrorKind::NonPositiveR:
      return "NonPositiveR";
    case ErrorKind::Degenerate:
      return "Degenerate";
    case ErrorKind::OutOfRange:
      return "OutOfRange";
    case ErrorKind::AboveThreshold:
      return "AboveThreshold";
    case ErrorKind::ClassMismatch:
      return "ClassMismatch";
    case ErrorKind::NoConvergence:
      return "NoConvergence";
    case ErrorKind::MalformedDocument:
      return "MalformedDocument";
  }
  return "Unknown";
}

}  // namespace cvgate
