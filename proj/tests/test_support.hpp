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

#include <Eigen/Core>
#include <cstdint>
#include <random>

#include "cvgate/scheduler.hpp"
#include "cvgate/symplectic.hpp"
#include "cvgate/targets.hpp"

namespace cvgate::testing {

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A> &a, const Eigen::MatrixBase<B> &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  Eigen::Matrix2d matrix(double lo = -2, double hi = 2) {
    Eigen::Matrix2d m;
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = uniform(lo, hi);
    return m;
  }
  std::mt19937_64 &engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline CanonicalHamiltonian canonical(double c1, double c2) {
  CanonicalHamiltonian h;
  h.c1 = c1;
  h.c2 = c2;
  return h;
}

}  // namespace cvgate::testing
