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

#include <vector>

#include "eltqc/types.hpp"

namespace eltqc {

// Time-parametrized operator-sum (Kraus) representation of one channel.
// Invariants: Σ_i M_i†M_i = I within 1e-12; each M_i a contraction.
struct KrausMap {
  int dim = 0;
  std::vector<ComplexMatrix> operators;
  double time = 0.0;  // dimensionless gamma*t of the map
};

enum class ChannelKind { AmplitudeDamping };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::AmplitudeDamping;
  double rate = 1.0;  // physical decay rate gamma; dynamics depend on gamma*t only
  int dim = 2;
};

// Throws InvalidDensityMatrix unless d is Hermitian, unit trace, and PSD
// within tol.
void validate_density(const ComplexMatrix& d, double tol = 1e-10);

// Throws unless the completeness and contraction invariants hold.
void validate_kraus(const KrausMap& map, double tol = 1e-12);

// Two-operator amplitude-damping map at dimensionless time gamma_t:
//   M_0 = diag(1, sqrt(e^{-gamma t})),  M_1 = [[0, sqrt(1 - e^{-gamma t})], [0, 0]].
KrausMap amplitude_damping_kraus(double gamma_t);

// Σ_i M_i D M_i†. Output re-Hermitized; trace preserved.
ComplexMatrix apply_channel(const KrausMap& map, const ComplexMatrix& density);

// Fixed-step RK4 integration of
//   dD/ds = -i[H, D] + Σ_i (C_i D C_i† − ½{C_i†C_i, D})
// to s = gamma_t, with s and H both dimensionless in units of the channel
// rate. Independent oracle for apply_channel.
ComplexMatrix lindblad_propagate(const ChannelSpec& spec,
                                 const ComplexMatrix& hamiltonian,
                                 const ComplexMatrix& density0, double gamma_t,
                                 int steps = 1000);

}  // namespace eltqc
