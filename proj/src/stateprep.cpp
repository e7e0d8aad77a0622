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

#include "eltqc/stateprep.hpp"

#include <cmath>

#include "eltqc/channels.hpp"
#include "eltqc/linalg.hpp"

namespace eltqc {

VectorEnsemble decompose_density(const ComplexMatrix& density) {
  validate_density(density);
  const Eigen::Index n = density.rows();
  const EigenSystem eig = hermitian_eig(density, 1e-10);

  VectorEnsemble out;
  out.system_dim = static_cast<int>(n);
  out.padded_dim = static_cast<int>(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double weight = eig.values(k);
    if (weight <= 1e-12) continue;  // prune null directions
    out.weights.push_back(weight);
    out.vectors.push_back(pad(eig.vectors.col(k), out.padded_dim));
  }
  return out;
}

VectorEnsemble two_vector_decomposition() {
  VectorEnsemble out;
  out.system_dim = 2;
  out.padded_dim = 4;
  ComplexVector v0 = ComplexVector::Zero(4);
  v0(1) = 1.0;
  ComplexVector v1 = ComplexVector::Zero(4);
  v1(0) = 1.0 / std::sqrt(2.0);
  v1(1) = 1.0 / std::sqrt(2.0);
  out.vectors = {v0, v1};
  out.weights = {0.5, 0.5};
  return out;
}

ComplexVector pad(const ComplexVector& v, int target_dim) {
  if (target_dim < v.size())
    fail(ErrorKind::ShrinkNotAllowed,
         "cannot pad " + std::to_string(v.size()) + " entries into " +
             std::to_string(target_dim));
  ComplexVector out = ComplexVector::Zero(target_dim);
  out.head(v.size()) = v;
  return out;
}

ComplexMatrix reconstruct_density(const VectorEnsemble& ensemble) {
  const int n = ensemble.system_dim;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < ensemble.vectors.size(); ++j) {
    const ComplexVector head = ensemble.vectors[j].head(n);
    out += ensemble.weights[j] * (head * head.adjoint());
  }
  return out;
}

}  // namespace eltqc
