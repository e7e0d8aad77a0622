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

#include "eltqc/dilation.hpp"

#include <cmath>

#include "eltqc/linalg.hpp"

namespace eltqc {

DilatedUnitary dilate(const ComplexMatrix& m, double tol) {
  require_square(m, "dilation input");
  if (!all_finite(m)) fail(ErrorKind::NotContraction, "non-finite entries");
  const Eigen::Index n = m.rows();

  const ComplexMatrix gram = m.adjoint() * m;
  const EigenSystem eig = hermitian_eig(gram, 1e-10);
  const double sigma_max = std::sqrt(std::max(0.0, eig.values(0)));
  if (sigma_max > 1.0 + tol)
    fail(ErrorKind::NotContraction,
         "largest singular value " + std::to_string(sigma_max) +
             " exceeds 1 + tol");

  // A singular value of 1 + tol pushes eigenvalues of I - M†M down to about
  // -2 tol, so the clamp must be at least that wide.
  const double clamp = std::max(1e-10, 4.0 * tol);
  const ComplexMatrix defect = psd_sqrt(
      static_cast<ComplexMatrix>(identity(n) - gram), clamp);
  const ComplexMatrix defect_adj = psd_sqrt(
      static_cast<ComplexMatrix>(identity(n) - m * m.adjoint()), clamp);

  DilatedUnitary out;
  out.source_index = 0;
  out.system_dim = static_cast<int>(n);
  out.matrix = ComplexMatrix(2 * n, 2 * n);
  out.matrix.block(0, 0, n, n) = m;
  out.matrix.block(0, n, n, n) = defect_adj;
  out.matrix.block(n, 0, n, n) = defect;
  out.matrix.block(n, n, n, n) = -m.adjoint();

  if (unitarity_defect(out.matrix) > 1e-10)
    fail(ErrorKind::NotUnitary, "dilation failed the unitarity check");
  return out;
}

std::vector<DilatedUnitary> dilate_channel(const KrausMap& map) {
  std::vector<DilatedUnitary> out;
  out.reserve(map.operators.size());
  for (std::size_t i = 0; i < map.operators.size(); ++i) {
    DilatedUnitary u = dilate(map.operators[i]);
    u.source_index = static_cast<int>(i);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace eltqc
