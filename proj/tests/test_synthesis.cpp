// Copyright 2026 The eltqc authors
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

#include <cmath>

#include "doctest.h"

#include "eltqc/channels.hpp"
#include "eltqc/dilation.hpp"
#include "eltqc/linalg.hpp"
#include "eltqc/stateprep.hpp"
#include "eltqc/synthesis.hpp"
#include "test_util.hpp"

using namespace eltqc;

namespace {

int count_cnots(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::CNOT) ++n;
  return n;
}

ComplexMatrix cnot_high_control() {
  return circuit_unitary(Circuit{2, {Gate::cnot(1, 0)}});
}

ComplexMatrix swap_gate() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

ComplexMatrix iswap_gate() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = Complex(0.0, 1.0);
  s(2, 1) = Complex(0.0, 1.0);
  s(3, 3) = 1.0;
  return s;
}

ComplexMatrix rebuild(const WeylDecomposition& d) {
  const Complex phase = std::exp(Complex(0.0, d.phase));
  return phase * kron(d.k1l, d.k1r) * canonical_gate(d.a, d.b, d.c) * kron(d.k2l, d.k2r);
}

void check_interaction_invariants(const WeylDecomposition& d, const ComplexMatrix& u) {
  CHECK(d.reconstruction_error < 1e-9);
  CHECK(max_abs_diff(rebuild(d), u) < 1e-9);
  for (const ComplexMatrix* k : {&d.k1l, &d.k1r, &d.k2l, &d.k2r}) {
    CHECK(unitarity_defect(*k) < 1e-9);
    CHECK(std::abs(k->determinant() - Complex(1.0)) < 1e-9);
  }
}

void check_synthesis(const ComplexMatrix& u, int max_cnots) {
  const SynthesisReport r = synthesize_2q(u);
  CHECK(r.fidelity >= 1.0 - 1e-9);
  CHECK(r.cnot_count <= max_cnots);
  CHECK(r.cnot_count == count_cnots(r.circuit));
  const ComplexMatrix rebuilt =
      std::exp(Complex(0.0, r.global_phase)) * circuit_unitary(r.circuit);
  CHECK(max_abs_diff(rebuilt, u) < 1e-8);
}

}  // namespace

TEST_CASE("canonical_gate is unitary and symmetric under its construction") {
  const ComplexMatrix c = canonical_gate(0.6, 0.25, 0.1);
  CHECK(unitarity_defect(c) < 1e-13);
  CHECK(max_abs_diff(c, ComplexMatrix(c.transpose())) < 1e-13);
  CHECK(max_abs_diff(canonical_gate(0.0, 0.0, 0.0), identity(4)) < 1e-13);
}

TEST_CASE("interaction coordinates of the named gates match their known values") {
  const double q = M_PI / 4.0;

  const WeylDecomposition cnot = weyl_decompose(cnot_high_control());
  CHECK(std::abs(cnot.a - q) < 1e-9);
  CHECK(std::abs(cnot.b) < 1e-9);
  CHECK(std::abs(cnot.c) < 1e-9);
  check_interaction_invariants(cnot, cnot_high_control());

  const WeylDecomposition swap = weyl_decompose(swap_gate());
  CHECK(std::abs(swap.a - q) < 1e-9);
  CHECK(std::abs(swap.b - q) < 1e-9);
  CHECK(std::abs(swap.c - q) < 1e-9);
  check_interaction_invariants(swap, swap_gate());

  const WeylDecomposition iswap = weyl_decompose(iswap_gate());
  CHECK(std::abs(iswap.a - q) < 1e-9);
  CHECK(std::abs(iswap.b - q) < 1e-9);
  CHECK(std::abs(iswap.c) < 1e-9);
  check_interaction_invariants(iswap, iswap_gate());
}

TEST_CASE("interaction coordinates of local gates vanish") {
  Rng rng(71);
  const ComplexMatrix u = kron(testutil::haar_unitary(2, rng), testutil::haar_unitary(2, rng));
  const WeylDecomposition d = weyl_decompose(u);
  CHECK(std::abs(d.a) < 1e-9);
  CHECK(std::abs(d.b) < 1e-9);
  CHECK(std::abs(d.c) < 1e-9);
  check_interaction_invariants(d, u);
}

TEST_CASE("interior canonical coordinates round-trip through the decomposition") {
  for (const auto& [a, b, c] : {std::tuple{0.6, 0.25, 0.1}, std::tuple{0.3, 0.2, 0.05}}) {
    const ComplexMatrix u = canonical_gate(a, b, c);
    const WeylDecomposition d = weyl_decompose(u);
    CHECK(std::abs(d.a - a) < 1e-9);
    CHECK(std::abs(d.b - b) < 1e-9);
    CHECK(std::abs(d.c - c) < 1e-9);
    check_interaction_invariants(d, u);
  }
}

TEST_CASE("random unitaries decompose into the canonical chamber") {
  Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexMatrix u = testutil::haar_unitary(4, rng);
    const WeylDecomposition d = weyl_decompose(u);
    check_interaction_invariants(d, u);
    CHECK(d.a <= M_PI / 4.0 + 1e-9);
    CHECK(d.a >= d.b - 1e-9);
    CHECK(d.b >= std::abs(d.c) - 1e-9);
    CHECK(d.b >= -1e-9);
  }
}

TEST_CASE("weyl_decompose validates its input") {
  try {
    weyl_decompose(identity(3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  try {
    weyl_decompose(ComplexMatrix(2.0 * identity(4)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnitary);
  }
}

TEST_CASE("single-qubit euler angles rebuild the gate exactly") {
  Rng rng(73);
  std::vector<ComplexMatrix> cases;
  cases.push_back(identity(2));
  cases.push_back(ry_matrix(1.3));
  cases.push_back(rz_matrix(-2.1));
  ComplexMatrix x(2, 2), h(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const double r = std::sqrt(0.5);
  h << r, r, r, -r;
  cases.push_back(x);
  cases.push_back(h);
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = std::exp(Complex(0.0, 0.4));
  diag(1, 1) = std::exp(Complex(0.0, -1.9));
  cases.push_back(diag);
  for (int trial = 0; trial < 20; ++trial) cases.push_back(testutil::haar_unitary(2, rng));

  for (const ComplexMatrix& v : cases) {
    const ZyzAngles z = zyz_decompose(v);
    const ComplexMatrix rebuilt = std::exp(Complex(0.0, z.phase)) * rz_matrix(z.alpha) *
                                  ry_matrix(z.beta) * rz_matrix(z.gamma);
    CHECK(max_abs_diff(rebuilt, v) < 1e-12);
  }
}

TEST_CASE("synthesis uses no entangling gates for local unitaries") {
  Rng rng(74);
  check_synthesis(identity(4), 0);
  check_synthesis(kron(testutil::haar_unitary(2, rng), testutil::haar_unitary(2, rng)), 0);
}

TEST_CASE("synthesis of controlled gates uses the minimal cnot count") {
  check_synthesis(cnot_high_control(), 1);

  ComplexMatrix cz = identity(4);
  cz(3, 3) = -1.0;
  check_synthesis(cz, 1);

  ComplexMatrix controlled_phase = identity(4);
  controlled_phase(3, 3) = std::exp(Complex(0.0, 0.9));
  check_synthesis(controlled_phase, 2);

  check_synthesis(canonical_gate(0.5, 0.2, 0.0), 2);
  check_synthesis(swap_gate(), 3);
}

TEST_CASE("synthesis of random unitaries stays within three cnots at high fidelity") {
  Rng rng(75);
  for (int trial = 0; trial < 50; ++trial)
    check_synthesis(testutil::haar_unitary(4, rng), 3);
}

TEST_CASE("prep_and_apply reproduces the dilated action on a padded vector") {
  Rng rng(76);
  const KrausMap map = amplitude_damping_kraus(std::log(2.0));
  for (const ComplexMatrix& op : map.operators) {
    const DilatedUnitary d = dilate(op);
    for (int trial = 0; trial < 5; ++trial) {
      ComplexVector padded = ComplexVector::Zero(4);
      const ComplexVector v = testutil::random_unit_vector(2, rng);
      padded(0) = v(0);
      padded(1) = v(1);

      const Circuit circuit = prep_and_apply(d, padded);
      ComplexVector zero = ComplexVector::Zero(4);
      zero(0) = 1.0;
      const ComplexVector via_circuit = simulate(circuit, zero);
      const ComplexVector direct = d.matrix * padded;
      for (int k = 0; k < 4; ++k)
        CHECK(std::abs(std::norm(via_circuit(k)) - std::norm(direct(k))) < 1e-12);
    }
  }
}

TEST_CASE("prep_and_apply validates the vector") {
  const DilatedUnitary d = dilate(identity(2));

  ComplexVector not_padded = ComplexVector::Zero(4);
  not_padded(0) = std::sqrt(0.5);
  not_padded(2) = std::sqrt(0.5);
  try {
    prep_and_apply(d, not_padded);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPadded);
  }

  ComplexVector shrunk = ComplexVector::Zero(4);
  shrunk(0) = 0.5;
  try {
    prep_and_apply(d, shrunk);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitGate);
  }
}
