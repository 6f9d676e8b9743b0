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

#include "cvgate/targets.hpp"

#include <sstream>

namespace cvgate {

double reduce_angle_symmetric(double phi) {
  double r = wrap_angle(phi);
  if (r > kPi) r -= 2 * kPi;
  return r;
}

TargetGate TargetGate::beam_splitter(double phi) {
  if (!std::isfinite(phi))
    throw SynthesisError(ErrorKind::OutOfRange, "beam splitter angle not finite");
  return {BeamSplitter{phi}};
}

TargetGate TargetGate::two_mode_squeezer(double r) {
  if (!std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing not finite");
  return {TwoModeSqueezer{r}};
}

TargetGate TargetGate::single_mode_squeezer(double r) {
  if (!std::isfinite(r))
    throw SynthesisError(ErrorKind::OutOfRange, "squeezing not finite");
  return {SingleModeSqueezer{r}};
}

TargetGate TargetGate::custom(const Block2d &block, double tol) {
  if (!block.allFinite() || std::abs(block.determinant() - 1) > tol)
    throw SynthesisError(ErrorKind::OutOfRange,
                         "custom target must have unit determinant");
  return {CustomGate{block}};
}

Block2d TargetGate::block() const {
  struct Visitor {
    Block2d operator()(const BeamSplitter &g) const {
      return beam_splitter_block(g.phi);
    }
    Block2d operator()(const TwoModeSqueezer &g) const {
      return two_mode_squeezer_block(g.r);
    }
    Block2d operator()(const SingleModeSqueezer &g) const {
      return single_mode_squeezer_block(g.r);
    }
    Block2d operator()(const CustomGate &g) const { return g.block; }
  };
  return std::visit(Visitor{}, gate);
}

std::string TargetGate::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (auto *bs = std::get_if<BeamSplitter>(&gate))
    os << "bs:" << bs->phi;
  else if (auto *tms = std::get_if<TwoModeSqueezer>(&gate))
    os << "tms:" << tms->r;
  else if (auto *sms = std::get_if<SingleModeSqueezer>(&gate))
    os << "sms:" << sms->r;
  else {
    const Block2d &b = std::get<CustomGate>(gate).block;
    os << "custom:" << b(0, 0) << ',' << b(0, 1) << ',' << b(1, 0) << ','
       << b(1, 1);
  }
  return os.str();
}

}  // namespace cvgate
