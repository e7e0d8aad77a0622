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

#include "eltqc/elt.hpp"
#include "eltqc/series.hpp"

namespace eltqc {

// Per-time diagnostics for a fitted schedule. outside_hull[t] is nonzero
// when the reference leaves [hull_min, hull_max]; the residual then equals
// the distance to the nearest hull endpoint.
struct FitReport {
  std::vector<double> times;
  std::vector<double> residuals;
  std::vector<double> hull_min;
  std::vector<double> hull_max;
  std::vector<int> outside_hull;
};

// For each time t: minimize (sum_i w_i P[t][i] - ref(t))^2 over the
// probability simplex; among all minimizers, return the minimum-norm one.
// That point is the reg -> 0+ limit of the ridge-regularized objective, so
// reg only names the tie-breaking rule and its magnitude does not enter.
// P[t][i] is the excited population of trajectory i at grid point t.
WeightSchedule fit_weights(const std::vector<std::vector<double>>& trajectory_pops,
                           const PopulationSeries& reference, double reg = 1e-8);

FitReport fit_report(const WeightSchedule& schedule,
                     const std::vector<std::vector<double>>& trajectory_pops,
                     const PopulationSeries& reference);

// Single-slice solver behind fit_weights, exposed for testing.
std::vector<double> fit_weight_slice(const std::vector<double>& pops, double reference);

}  // namespace eltqc
