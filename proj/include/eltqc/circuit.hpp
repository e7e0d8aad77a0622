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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eltqc/types.hpp"

namespace eltqc {

// Gate set: Paulis and Hadamard, RY/RZ rotations, CNOT, and a general
// two-qubit unitary U4 (used to run dilated unitaries before synthesis).
enum class GateKind { X, Z, H, RY, RZ, CNOT, U4 };

const char* to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::X;
  // X/Z/H/RY/RZ: {q}. CNOT: {control, target}. U4: {qa, qb}, where the 4x4
  // matrix acts on local index bit(qa) + 2*bit(qb).
  std::vector<int> qubits;
  double angle = 0.0;    // RY/RZ only
  ComplexMatrix matrix;  // U4 only

  static Gate x(int q);
  static Gate z(int q);
  static Gate h(int q);
  static Gate ry(int q, double theta);
  static Gate rz(int q, double theta);
  static Gate cnot(int control, int target);
  static Gate u4(int qa, int qb, ComplexMatrix m);
};

// Basis convention (frozen): basis index = Σ_q bit(q)·2^q, so index 1 means
// q0 excited and q1 in the ground state.
struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
};

struct ShotResult {
  std::map<int, long> counts;  // basis index -> occurrences
  long shots = 0;
  std::uint64_t seed = 0;
};

// Single-qubit rotation matrices (frozen conventions):
//   RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
//   RZ(t) = diag(e^{-it/2}, e^{+it/2})
ComplexMatrix ry_matrix(double theta);
ComplexMatrix rz_matrix(double theta);

// Exact statevector of the circuit applied to `input` (unit norm, dimension
// 2^width).
ComplexVector simulate(const Circuit& c, const ComplexVector& input);

// Draws `shots` independent basis-state outcomes from |amplitude|² of the
// simulated statevector. Identical seeds give identical counts.
ShotResult sample(const Circuit& c, const ComplexVector& input, long shots,
                  std::uint64_t seed);

// Ordered gate product as a dense matrix; widths above 4 are rejected.
ComplexMatrix circuit_unitary(const Circuit& c);

}  // namespace eltqc
