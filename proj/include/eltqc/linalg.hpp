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

#include "eltqc/types.hpp"

namespace eltqc {

struct EigenSystem {
  RealVector values;      // descending
  ComplexMatrix vectors;  // orthonormal eigenvectors as columns, same order
};

// Eigendecomposition of a Hermitian matrix. The input must be Hermitian
// within tol in max-norm; reconstruction Σ λ_k u_k u_k† holds within n·tol.
EigenSystem hermitian_eig(const ComplexMatrix& a, double tol = 1e-10);

// Principal square root of a positive-semidefinite Hermitian matrix.
// Eigenvalues in [-tol, 0) are clamped to 0 before the root; anything below
// -tol is rejected. The default clamp absorbs the few-ulp-negative defects
// that I - M†M develops for floating-point contractions.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol = 1e-10);

// ‖U†U − I‖_F; zero exactly when U is unitary.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace eltqc
