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

// Ensemble of unit vectors with convex weights whose weighted outer products
// reconstruct a density matrix on the first system_dim components. Vectors
// are stored zero-padded to padded_dim (the dilated dimension).
struct VectorEnsemble {
  std::vector<ComplexVector> vectors;
  std::vector<double> weights;
  int system_dim = 0;
  int padded_dim = 0;
};

// Eigendecomposition-based ensemble: eigenvectors with eigenvalue > 1e-12,
// weighted by their eigenvalues, padded to twice the system dimension.
VectorEnsemble decompose_density(const ComplexMatrix& density);

// Fixed non-orthogonal two-vector ensemble for the benchmark initial state
// (1/4)[[1,1],[1,3]]:  v_0 = (0,1,0,0),  v_1 = (1,1,0,0)/sqrt(2),  weights
// (1/2, 1/2). The population pipeline is decomposition-invariant, so this
// and decompose_density of the same matrix yield identical observables.
VectorEnsemble two_vector_decomposition();

// Zero-pad to target_dim; ShrinkNotAllowed if target_dim < v.size().
ComplexVector pad(const ComplexVector& v, int target_dim);

// Σ_j w_j v_j v_j† restricted to the first system_dim components.
ComplexMatrix reconstruct_density(const VectorEnsemble& ensemble);

}  // namespace eltqc
