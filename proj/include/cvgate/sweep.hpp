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

#include <string>
#include <string_view>
#include <vector>

#include "cvgate/scheduler.hpp"
#include "cvgate/types.hpp"

namespace cvgate {

/// Inclusive grid "start:stop:count", or a single value.
struct GridRange {
  double start = 0;
  double stop = 0;
  int count = 1;

  /// Throws OutOfRange on bad syntax.
  static GridRange parse(std::string_view text);
  std::vector<double> values() const;
};

enum class SweepTarget { TwoModeSqueezer, BeamSplitter };

/// One grid point. Infeasible points leave the numeric fields empty and carry
/// the error name in status; squeezing above the oscillatory threshold is
/// reported as "AboveThreshold" together with the concatenated solution.
struct SweepRow {
  double param = 0;
  double s = 0;
  double alpha = 0;
  double beta = 0;
  double total_time = 0;
  int n_blocks = 0;
  std::string status;
  bool has_values = false;
};

inline constexpr std::string_view kSweepHeader =
    "r,s,alpha,beta,total_time,n_blocks,status";

/// Grid over (param, s) in row-major order (param outer). For the XP family
/// the s grid is ignored and s is reported as 0.
std::vector<SweepRow> sweep(SweepTarget target, CouplingKind family,
                            const std::vector<double> &params,
                            const std::vector<double> &s_values,
                            double margin = kDefaultMargin);

std::string to_csv(const std::vector<SweepRow> &rows);

}  // namespace cvgate
