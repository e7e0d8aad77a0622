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

#include "eltqc/channels.hpp"
#include "eltqc/types.hpp"

namespace eltqc {

// Unitary 1-dilation of one Kraus operator on the doubled space.
// Invariants: unitarity_defect(matrix) < 1e-10; the top-left n x n block
// equals the source operator within 1e-12.
struct DilatedUnitary {
  int source_index = 0;
  int system_dim = 0;
  ComplexMatrix matrix;  // 2n x 2n
};

// Block dilation of a contraction M:
//   U = [[M, D_{M†}], [D_M, -M†]],  D_M = psd_sqrt(I - M†M).
// Throws NotContraction when the largest singular value exceeds 1 + tol.
DilatedUnitary dilate(const ComplexMatrix& m, double tol = 1e-9);

// One dilation per Kraus operator, indices preserved.
std::vector<DilatedUnitary> dilate_channel(const KrausMap& map);

}  // namespace eltqc
