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

#include "eltqc/series.hpp"
#include "eltqc/types.hpp"

namespace eltqc {

// Damped two-level atom coupled to a reservoir with Lorentzian coupling
// profile. gamma sets the time unit; lambda is the reservoir width (inverse
// correlation time) and delta the detuning, both in the same unit as gamma.
struct JCParams {
  double gamma = 1.0;
  double lambda = 0.2;
  double delta = 0.0;
};

// Lorentzian coupling profile evaluated at x = omega - omega0:
// (1/2pi) * gamma*lambda^2 / ((delta + x)^2 + lambda^2).
double spectral_density(const JCParams& p, double omega_minus_omega0);

// Excited-state amplitude G with dG/dt = -int_0^t f(t-s) G(s) ds, G(0) = 1,
// f(tau) = (gamma*lambda/2) e^{-(lambda - i delta) tau}, integrated as the
// equivalent linear system dG/du = -(lambda'/2) B, dB/du = G - (lambda' -
// i delta') B over the dimensionless grid u = gamma*t by classical RK4.
std::vector<Complex> kernel_amplitude(const JCParams& p, const std::vector<double>& grid);

// Closed form of the same amplitude,
//   G(u) = e^{-c u/2} [cosh(d u/2) + (c/d) sinh(d u/2)],
// c = lambda' - i delta', d = sqrt(c^2 - 2 lambda'), evaluated in an
// overflow-safe exponential arrangement with a series branch for small d u.
Complex kernel_amplitude_closed_form(const JCParams& p, double gamma_t);

// rho_11(t) = |G(t)|^2 * rho11_0 on the given gamma*t grid, via the RK4
// kernel integration. Grid must be nondecreasing and nonnegative.
PopulationSeries exact_populations(const JCParams& p, const std::vector<double>& grid,
                                   double rho11_0 = 1.0);

}  // namespace eltqc
