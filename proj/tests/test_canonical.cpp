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


#include <Eigen/SVD>

#include "catch_amalgamated.hpp"
#include "cvgate/canonical.hpp"
#include "cvgate/symplectic.hpp"
#include "test_support.hpp"

using namespace cvgate;
using cvgate::testing::max_abs_diff;
using cvgate::testing::Rng;

namespace {

Eigen::Matrix2d rot(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return r;
}

// Rebuilds C from its canonical form by undoing the local rotations.
Eigen::Matrix2d reconstruct(const CanonicalHamiltonian &h) {
  Eigen::Matrix2d k;
  k << 0, h.c1, h.c2, 0;
  return rot(h.rotation.phiA) * k * rot(h.rotation.phiB).transpose();
}

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const SynthesisError &e) {
    return e.kind();
  }
  return ErrorKind::MalformedDocument;
}

}  // namespace

TEST_CASE("pure xp coupling is already canonical") {
  const auto h = canonical_form(CouplingMatrix(0, 1, 0, 0));
  CHECK(h.c1 == Catch::Approx(1).epsilon(1e-15));
  CHECK(h.c2 == 0);
  CHECK(h.sign_degenerate);
  CHECK(classify(h).kind == CouplingKind::XP);
}

TEST_CASE("antisymmetric coupling is beam-splitter-like with unit ratio") {
  const auto h = canonical_form(CouplingMatrix(0, 1, -1, 0));
  CHECK(h.c1 == Catch::Approx(1));
  CHECK(h.c2 == Catch::Approx(-1));
  const auto cls = classify(h);
  CHECK(cls.kind == CouplingKind::BeamSplitterLike);
  CHECK(cls.s == Catch::Approx(1));
}

TEST_CASE("symmetric swap-like coupling has negative determinant") {
  // det C = -1 and local rotations preserve det; canonical det is -c1 c2.
  const auto h = canonical_form(CouplingMatrix(0, 1, 1, 0));
  CHECK(h.c1 == Catch::Approx(1));
  CHECK(h.c2 == Catch::Approx(1));
  CHECK(max_abs_diff(reconstruct(h), CouplingMatrix(0, 1, 1, 0).matrix()) < 1e-12);
}

TEST_CASE("random couplings reconstruct from their canonical form") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const CouplingMatrix c(rng.matrix(-3, 3));
    const auto h = canonical_form(c);
    CHECK(max_abs_diff(reconstruct(h), c.matrix()) < 1e-10);
    CHECK(h.c1 >= std::abs(h.c2));
    CHECK(h.c1 > 0);
    if (std::abs(c.determinant()) > 1e-12)
      CHECK((h.c2 > 0) == (c.determinant() < 0));
    // Singular values are basis independent.
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(c.matrix());
    CHECK(h.c1 == Catch::Approx(svd.singularValues()(0)).epsilon(1e-12));
    CHECK(std::abs(h.c2) ==
          Catch::Approx(svd.singularValues()(1)).margin(1e-12));
  }
}

TEST_CASE("canonicalization is idempotent") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto h = canonical_form(CouplingMatrix(rng.matrix()));
    const auto again = canonical_form(h.coupling());
    CHECK(again.c1 == Catch::Approx(h.c1).epsilon(1e-12));
    CHECK(again.c2 == Catch::Approx(h.c2).margin(1e-12));
  }
}

TEST_CASE("conjugation by the four phase pairs yields plus and minus H1, H2") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const double c1 = rng.uniform(0.1, 3), c2 = rng.uniform(-c1, c1);
    const CouplingMatrix h(0, c1, c2, 0);
    const Eigen::Matrix2d h1 = h.matrix();
    Eigen::Matrix2d h2;
    h2 << 0, c2, c1, 0;
    CHECK(max_abs_diff(conjugate_hamiltonian(h, {0, 0}).matrix(), h1) < 1e-12);
    CHECK(max_abs_diff(conjugate_hamiltonian(h, {kPi / 2, 3 * kPi / 2}).matrix(), h2) < 1e-12);
    CHECK(max_abs_diff(conjugate_hamiltonian(h, {kPi, 0}).matrix(), Eigen::Matrix2d(-h1)) < 1e-12);
    CHECK(max_abs_diff(conjugate_hamiltonian(h, {kPi / 2, kPi / 2}).matrix(), Eigen::Matrix2d(-h2)) < 1e-12);
  }
}

TEST_CASE("rotating both modes by pi leaves the coupling unchanged") {
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    const CouplingMatrix c(rng.matrix());
    const PhaseShiftPair ph(rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi));
    CHECK(max_abs_diff(conjugate_hamiltonian(c, {kPi, kPi}).matrix(), c.matrix()) < 1e-12);
    const auto there = conjugate_hamiltonian(c, ph);
    CHECK(max_abs_diff(conjugate_hamiltonian(there, -ph).matrix(), c.matrix()) < 1e-12);
  }
}

TEST_CASE("conjugated coupling generates the conjugated evolution") {
  // exp(t A') = P^-1 exp(t A) P where P is the applied phase rotation.
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const CouplingMatrix c(rng.matrix());
    const PhaseShiftPair ph(rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi));
    const double t = rng.uniform(-1, 1);
    const Symplectic4d p = phase_rotation_full(ph);
    const Symplectic4d lhs = propagator_full(conjugate_hamiltonian(c, ph), t);
    const Symplectic4d rhs = p.transpose() * propagator_full(c, t) * p;
    CHECK(max_abs_diff(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("classification by ratio and sign") {
  CHECK(classify(1, 0).kind == CouplingKind::XP);
  CHECK(classify(2, 1e-12).kind == CouplingKind::XP);
  const auto amp = classify(2, 0.5);
  CHECK(amp.kind == CouplingKind::AmplifierLike);
  CHECK(amp.s == Catch::Approx(0.5));
  CHECK_FALSE(amp.tms_degenerate);
  const auto bs = classify(4, -1);
  CHECK(bs.kind == CouplingKind::BeamSplitterLike);
  CHECK(bs.s == Catch::Approx(0.5));
  CHECK(classify(1, 1).tms_degenerate);
  CHECK(to_string(CouplingKind::AmplifierLike) == "amplifier");
}

TEST_CASE("invalid couplings are rejected") {
  CHECK(kind_of([] { CouplingMatrix(0, 0, 0, 0); }) == ErrorKind::InvalidCoupling);
  CHECK(kind_of([] { CouplingMatrix(0, std::nan(""), 0, 0); }) == ErrorKind::InvalidCoupling);
  CHECK(kind_of([] { classify(0, 0); }) == ErrorKind::InvalidCoupling);
}

TEST_CASE("phase pairs wrap into the principal range") {
  const PhaseShiftPair p(-kPi / 2, 2 * kPi);
  CHECK(p.phiA == Catch::Approx(3 * kPi / 2));
  CHECK(p.phiB == 0);
  CHECK(PhaseShiftPair(-0.0, 4 * kPi).is_identity());
  CHECK((PhaseShiftPair(kPi, 0) + PhaseShiftPair(kPi, 0)).is_identity());
}
