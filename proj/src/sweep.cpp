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

#include "cvgate/sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "cvgate/synthesis_generic.hpp"
#include "cvgate/synthesis_xp.hpp"

namespace cvgate {

namespace {

double parse_double(std::string_view text) {
  // std::from_chars for double is available with GCC 11
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw SynthesisError(ErrorKind::OutOfRange,
                         "bad number '" + std::string(text) + "' in range");
  return v;
}

SweepRow evaluate(SweepTarget target, CouplingKind family, double param,
                  double s, double margin) {
  SweepRow row;
  row.param = param;
  row.s = family == CouplingKind::XP ? 0 : s;
  try {
    DecompositionParams block;
    int n = 1;
    row.status = "ok";
    if (family == CouplingKind::XP) {
      block = target == SweepTarget::TwoModeSqueezer ? synth_tms_xp(param)
                                                     : synth_bs_xp(param);
      row.alpha = block.steps[0].time;
      row.beta = block.steps[1].time;
    } else {
      GenericDecomposition d;
      if (family == CouplingKind::AmplifierLike) {
        d = target == SweepTarget::TwoModeSqueezer ? synth_tms_amp(param, s)
                                                   : synth_bs_amp(param, s);
      } else if (target == SweepTarget::BeamSplitter) {
        d = synth_bs_osc(param, s);
      } else if (param <= r_threshold(s)) {
        d = synth_tms_osc(param, s);
      } else {
        n = threshold_block_count(param, s, margin);
        d = synth_tms_osc(param / n, s);
        row.status = "AboveThreshold";
      }
      block = d.params();
      row.alpha = d.alpha;
      row.beta = d.beta;
    }
    row.n_blocks = n;
    row.total_time = n * block.total_time();
    row.has_values = true;
  } catch (const SynthesisError &e) {
    row.status = std::string(e.name());
    row.has_values = false;
  }
  return row;
}

}  // namespace

GridRange GridRange::parse(std::string_view text) {
  GridRange g;
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    g.start = g.stop = parse_double(text);
    return g;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos)
    throw SynthesisError(ErrorKind::OutOfRange,
                         "range must be start:stop:count, got '" + std::string(text) + "'");
  g.start = parse_double(text.substr(0, first));
  g.stop = parse_double(text.substr(first + 1, second - first - 1));
  const std::string_view count = text.substr(second + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size() || n < 1)
    throw SynthesisError(ErrorKind::OutOfRange,
                         "range count must be a positive integer");
  g.count = n;
  return g;
}

std::vector<double> GridRange::values() const {
  std::vector<double> v;
  if (count == 1) return {start};
  for (int i = 0; i < count; ++i)
    v.push_back(start + (stop - start) * i / (count - 1));
  return v;
}

std::vector<SweepRow> sweep(SweepTarget target, CouplingKind family,
                            const std::vector<double> &params,
                            const std::vector<double> &s_values, double margin) {
  std::vector<SweepRow> rows;
  const std::vector<double> s_grid =
      family == CouplingKind::XP ? std::vector<double>{0.0} : s_values;
  for (double p : params)
    for (double s : s_grid) rows.push_back(evaluate(target, family, p, s, margin));
  return rows;
}

std::string to_csv(const std::vector<SweepRow> &rows) {
  std::ostringstream os;
  os.precision(17);
  os << kSweepHeader << '\n';
  for (const auto &row : rows) {
    os << row.param << ',' << row.s << ',';
    if (row.has_values)
      os << row.alpha << ',' << row.beta << ',' << row.total_time << ','
         << row.n_blocks;
    else
      os << ",,,";
    os << ',' << row.status << '\n';
  }
  return os.str();
}

}  // namespace cvgate
