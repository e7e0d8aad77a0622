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

#include <cmath>

#include "doctest.h"

#include "eltqc/dilation.hpp"
#include "eltqc/linalg.hpp"
#include "eltqc/rng.hpp"
#include "test_util.hpp"

using namespace eltqc;

TEST_CASE("dilation of the identity is the frozen block form diag(1,1,-1,-1)") {
  const DilatedUnitary d = dilate(identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(d.matrix, expected) < 1e-14);
  CHECK(d.system_dim == 2);
}

TEST_CASE("dilation of the damping survival operator has the frozen pattern") {
  for (double t : {0.05, std::log(2.0), 1.0, 5.0}) {
    const double a = std::sqrt(std::exp(-t));
    const double b = std::sqrt(1.0 - std::exp(-t));
    const KrausMap map = amplitude_damping_kraus(t);
    const DilatedUnitary d = dilate(map.operators[0]);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 1) = a;
    expected(1, 3) = b;
    expected(2, 2) = -1.0;
    expected(3, 1) = b;
    expected(3, 3) = -a;
    CHECK(max_abs_diff(d.matrix, expected) < 1e-12);
  }
}

TEST_CASE("dilation of the damping decay operator has the frozen pattern") {
  for (double t : {0.05, std::log(2.0), 1.0, 5.0}) {
    const double a = std::sqrt(std::exp(-t));
    const double b = std::sqrt(1.0 - std::exp(-t));
    const KrausMap map = amplitude_damping_kraus(t);
    const DilatedUnitary d = dilate(map.operators[1]);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 1) = b;
    expected(0, 2) = a;
    expected(1, 3) = 1.0;
    expected(2, 0) = 1.0;
    expected(3, 1) = a;
    expected(3, 2) = -b;
    CHECK(max_abs_diff(d.matrix, expected) < 1e-12);
  }
}

TEST_CASE("dilations of random contractions are unitary and recover the block") {
  Rng rng(41);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 30; ++trial) {
      const ComplexMatrix m = testutil::random_contraction(n, rng);
      const DilatedUnitary d = dilate(m);
      CHECK(d.matrix.rows() == 2 * n);
      CHECK(unitarity_defect(d.matrix) < 1e-10);
      CHECK(max_abs_diff(ComplexMatrix(d.matrix.block(0, 0, n, n)), m) < 1e-12);
    }
  }
}

TEST_CASE("a padded vector keeps its first-block image under the dilation") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = testutil::random_contraction(2, rng);
    const DilatedUnitary d = dilate(m);
    ComplexVector padded = ComplexVector::Zero(4);
    const ComplexVector v = testutil::random_unit_vector(2, rng);
    padded(0) = v(0);
    padded(1) = v(1);
    const ComplexVector image = d.matrix * padded;
    const ComplexVector direct = m * v;
    CHECK(std::abs(image(0) - direct(0)) < 1e-12);
    CHECK(std::abs(image(1) - direct(1)) < 1e-12);
    CHECK(std::abs(image.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("dilate rejects matrices with singular values above one") {
  try {
    dilate(ComplexMatrix(1.5 * identity(2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotContraction);
  }
}

TEST_CASE("dilate_channel dilates every operator and preserves indices") {
  const KrausMap map = amplitude_damping_kraus(0.8);
  const std::vector<DilatedUnitary> ds = dilate_channel(map);
  REQUIRE(ds.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(ds[i].source_index == i);
    CHECK(unitarity_defect(ds[i].matrix) < 1e-10);
    CHECK(max_abs_diff(ComplexMatrix(ds[i].matrix.block(0, 0, 2, 2)), map.operators[i]) < 1e-12);
  }
}
