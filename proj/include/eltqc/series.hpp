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

#include <cstdint>
#include <string>
#include <vector>

namespace eltqc {

// Provenance tag for a population series; the CSV `source` column.
struct SeriesSource {
  enum class Kind { Exact, Statevector, Shots };
  Kind kind = Kind::Exact;
  long shots = 0;
  std::uint64_t seed = 0;

  static SeriesSource exact() { return {Kind::Exact, 0, 0}; }
  static SeriesSource statevector() { return {Kind::Statevector, 0, 0}; }
  static SeriesSource shot_based(long shots, std::uint64_t seed) {
    return {Kind::Shots, shots, seed};
  }

  std::string label() const {
    switch (kind) {
      case Kind::Exact:
        return "exact";
      case Kind::Statevector:
        return "statevector";
      case Kind::Shots:
        return "shots[n=" + std::to_string(shots) + ";seed=" + std::to_string(seed) + "]";
    }
    return "exact";
  }
};

// Ground and excited populations on a dimensionless gamma*t grid.
// Invariant: ground + excited = 1 within backend tolerance, values in [0, 1].
struct PopulationSeries {
  std::vector<double> times;
  std::vector<double> ground;
  std::vector<double> excited;
  SeriesSource source;
};

}  // namespace eltqc
