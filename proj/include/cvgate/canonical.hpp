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

#include "cvgate/types.hpp"

namespace cvgate {

/// Coupling matrix of V^dag H V for V = exp(-i phiA a^dag a) (x) exp(-i phiB
/// b^dag b): each mode's (x, p) pair is rotated by its phase and the bilinear
/// coefficients are read back, C' = R(phiA)^T C R(phiB).
CouplingMatrix conjugate_hamiltonian(const CouplingMatrix &c,
                                     const PhaseShiftPair &ph);

/// Reduces an arbitrary coupling to c1 x_A p_B + c2 p_A x_B with c1 = sigma1
/// and |c2| = sigma2. The returned rotation satisfies
/// conjugate_hamiltonian(c, rotation) == canonical(c1, c2).
///
/// Local phase shifts are proper rotations and leave det C invariant, while
/// det of the canonical matrix is -c1 c2. The sign of c2 is therefore
/// -sign(det C); for det C = 0 it is reported as 0 with sign_degenerate set.
CanonicalHamiltonian canonical_form(const CouplingMatrix &c,
                                    double tol = kDefaultTolerance);

/// Classifies a canonical pair after rescaling to c1 = 1. |c2/c1| <= tol is
/// treated as XP.
CouplingClass classify(double c1, double c2, double tol = kDefaultTolerance);

inline CouplingClass classify(const CanonicalHamiltonian &h,
                              double tol = kDefaultTolerance) {
  return classify(h.c1, h.c2, tol);
}

}  // namespace cvgate
