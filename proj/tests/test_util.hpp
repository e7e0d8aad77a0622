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

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "eltqc/rng.hpp"
#include "eltqc/types.hpp"

namespace eltqc::testutil {

inline ComplexMatrix gaussian_matrix(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

// QR of a Ginibre matrix with the R-diagonal phases folded back into Q; the
// resulting distribution is Haar on U(n).
inline ComplexMatrix haar_unitary(int n, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

inline ComplexMatrix random_density(int n, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(n, rng);
  ComplexMatrix d = g * g.adjoint();
  d /= d.trace().real();
  d = ComplexMatrix(0.5 * (d + d.adjoint().eval()));
  return d;
}

// Gaussian matrix scaled so every singular value is strictly below 1.
inline ComplexMatrix random_contraction(int n, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(n, rng);
  Eigen::JacobiSVD<ComplexMatrix> svd(g);
  const double top = svd.singularValues()(0);
  const double shrink = 0.05 + 0.9 * rng.uniform();
  return g * (shrink / top);
}

inline ComplexVector random_unit_vector(int n, Rng& rng) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

}  // namespace eltqc::testutil
