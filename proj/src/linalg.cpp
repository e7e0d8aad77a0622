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

#include "eltqc/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace eltqc {

EigenSystem hermitian_eig(const ComplexMatrix& a, double tol) {
  require_square(a, "hermitian_eig input");
  if (!all_finite(a))
    fail(ErrorKind::NotHermitian, "matrix has non-finite entries");
  const double defect = hermiticity_defect(a);
  if (defect > tol)
    fail(ErrorKind::NotHermitian,
         "Hermiticity defect " + std::to_string(defect) + " exceeds tol " +
             std::to_string(tol));

  // SelfAdjointEigenSolver reads the lower triangle of (A + A†)/2, so tiny
  // asymmetries within tol cannot leak into the result.
  const ComplexMatrix sym = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    fail(ErrorKind::NotHermitian, "eigendecomposition did not converge");

  const Eigen::Index n = a.rows();
  EigenSystem out;
  out.values = RealVector(n);
  out.vectors = ComplexMatrix(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);  // ascending -> descending
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol) {
  EigenSystem eig = hermitian_eig(a, tol);
  const Eigen::Index n = a.rows();
  RealVector roots(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double lambda = eig.values(k);
    if (lambda < -tol)
      fail(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lambda) +
                                  " below -tol = " + std::to_string(-tol));
    if (lambda < 0.0) lambda = 0.0;
    roots(k) = std::sqrt(lambda);
  }
  ComplexMatrix s =
      eig.vectors * roots.asDiagonal().toDenseMatrix().cast<Complex>() *
      eig.vectors.adjoint();
  return (s + s.adjoint()) / 2.0;  // exactly Hermitian output
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect input");
  const ComplexMatrix residual =
      u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return residual.norm();
}

}  // namespace eltqc
