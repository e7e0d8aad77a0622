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

#include "eltqc/rng.hpp"
#include "eltqc/stateprep.hpp"
#include "test_util.hpp"

using namespace eltqc;

namespace {

ComplexMatrix benchmark_density() {
  ComplexMatrix d(2, 2);
  d << 0.25, 0.25, 0.25, 0.75;
  return d;
}

}  // namespace

TEST_CASE("decompose_density returns the eigen ensemble of the benchmark state") {
  const VectorEnsemble e = decompose_density(benchmark_density());
  REQUIRE(e.vectors.size() == 2);
  CHECK(e.system_dim == 2);
  CHECK(e.padded_dim == 4);
  const double hi = (2.0 + std::sqrt(2.0)) / 4.0;
  const double lo = (2.0 - std::sqrt(2.0)) / 4.0;
  CHECK(e.weights[0] == doctest::Approx(hi).epsilon(1e-12));
  CHECK(e.weights[1] == doctest::Approx(lo).epsilon(1e-12));
  for (const ComplexVector& v : e.vectors) {
    REQUIRE(v.size() == 4);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK(std::abs(v(2)) == 0.0);
    CHECK(std::abs(v(3)) == 0.0);
  }
  CHECK(max_abs_diff(reconstruct_density(e), benchmark_density()) < 1e-14);
}

TEST_CASE("decompose_density reconstructs random densities") {
  Rng rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix d = testutil::random_density(2, rng);
    const VectorEnsemble e = decompose_density(d);
    double total = 0.0;
    for (double w : e.weights) {
      CHECK(w > 0.0);
      total += w;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(max_abs_diff(reconstruct_density(e), d) < 1e-12);
  }
}

TEST_CASE("decompose_density drops null directions of pure states") {
  ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
  pure(1, 1) = 1.0;
  const VectorEnsemble e = decompose_density(pure);
  REQUIRE(e.vectors.size() == 1);
  CHECK(e.weights[0] == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(e.vectors[0](1)) - 1.0) < 1e-12);
  CHECK(std::abs(e.vectors[0](0)) < 1e-12);
}

TEST_CASE("the fixed two-vector ensemble matches its frozen entries") {
  const VectorEnsemble e = two_vector_decomposition();
  REQUIRE(e.vectors.size() == 2);
  CHECK(e.weights[0] == doctest::Approx(0.5));
  CHECK(e.weights[1] == doctest::Approx(0.5));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(e.vectors[0](0)) < 1e-15);
  CHECK(std::abs(e.vectors[0](1) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(e.vectors[1](0) - Complex(r)) < 1e-15);
  CHECK(std::abs(e.vectors[1](1) - Complex(r)) < 1e-15);
  for (const ComplexVector& v : e.vectors) {
    REQUIRE(v.size() == 4);
    CHECK(std::abs(v(2)) == 0.0);
    CHECK(std::abs(v(3)) == 0.0);
  }
  CHECK(max_abs_diff(reconstruct_density(e), benchmark_density()) < 1e-14);
}

TEST_CASE("non-orthogonal and eigen decompositions rebuild the same density") {
  const ComplexMatrix via_fixed = reconstruct_density(two_vector_decomposition());
  const ComplexMatrix via_eigen = reconstruct_density(decompose_density(benchmark_density()));
  CHECK(max_abs_diff(via_fixed, via_eigen) < 1e-13);
}

TEST_CASE("pad extends with zeros and refuses to shrink") {
  ComplexVector v(2);
  v << Complex(0.6), Complex(0.0, 0.8);
  const ComplexVector padded = pad(v, 5);
  REQUIRE(padded.size() == 5);
  CHECK(std::abs(padded(0) - v(0)) == 0.0);
  CHECK(std::abs(padded(1) - v(1)) == 0.0);
  for (int k = 2; k < 5; ++k) CHECK(std::abs(padded(k)) == 0.0);
  try {
    pad(padded, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShrinkNotAllowed);
  }
}

TEST_CASE("decompose_density rejects invalid densities") {
  ComplexMatrix bad(2, 2);
  bad << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(decompose_density(bad), Error);
}
