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

#pragma once

#include "eltqc/circuit.hpp"
#include "eltqc/dilation.hpp"
#include "eltqc/types.hpp"

namespace eltqc {

struct SynthesisReport {
  Circuit circuit;
  int cnot_count = 0;
  double fidelity = 0.0;     // |tr(U† C)| / 4 against the emitted circuit
  double global_phase = 0.0; // U ≈ e^{i global_phase} · circuit_unitary
};

// Cartan (Weyl-chamber) canonical data of a two-qubit unitary:
//   u = e^{i phase} (k1l ⊗ k1r) · exp(i(a XX + b YY + c ZZ)) · (k2l ⊗ k2r)
// with k*l acting on q1 and k*r on q0, coordinates reduced to the chamber
// a, b in [0, π/4], c in (-π/4, π/4], a ≥ b ≥ |c|.
struct WeylDecomposition {
  double a = 0.0, b = 0.0, c = 0.0;
  double phase = 0.0;
  ComplexMatrix k1l, k1r, k2l, k2r;  // 2x2, det 1
  double reconstruction_error = 0.0; // max-norm check of the identity above
};

WeylDecomposition weyl_decompose(const ComplexMatrix& u, double tol = 1e-10);

// exp(i(a XX + b YY + c ZZ)), evaluated in its Bell eigenbasis.
ComplexMatrix canonical_gate(double a, double b, double c);

// v = e^{i phase} RZ(alpha) RY(beta) RZ(gamma) for any 2x2 unitary v.
struct ZyzAngles {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, phase = 0.0;
};
ZyzAngles zyz_decompose(const ComplexMatrix& v);

// Decomposes a 4x4 unitary into {RY, RZ, CNOT} with at most 3 CNOTs; the
// emitted circuit equals U up to global phase with fidelity ≥ 1 - 1e-9.
SynthesisReport synthesize_2q(const ComplexMatrix& u);

// Preparation of the padded vector v from |00⟩ (a single-qubit rotation on
// q0, since padded vectors live in the q1 = 0 subspace) followed by the
// synthesized dilated unitary. The simulated output matches U·v up to
// global phase.
Circuit prep_and_apply(const DilatedUnitary& u, const ComplexVector& v);

}  // namespace eltqc
