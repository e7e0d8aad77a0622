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
#include <vector>

#include "doctest.h"

#include "eltqc/jcref.hpp"

using namespace eltqc;

namespace {

std::vector<double> uniform_grid(double t_max, int points) {
  std::vector<double> g(points);
  for (int k = 0; k < points; ++k) g[k] = t_max * double(k) / double(points - 1);
  return g;
}

constexpr double kStrongDecay = 0.1;   // half of lambda/gamma = 0.2
constexpr double kStrongFreq = 0.3;    // sqrt(lambda/2 - lambda^2/4) for lambda = 0.2

// With lambda = 0.2 gamma and zero detuning the memory kernel amplitude is
// exactly e^{-u/10} (cos(3u/10) + sin(3u/10)/3).
double strong_amplitude(double u) {
  return std::exp(-kStrongDecay * u) *
         (std::cos(kStrongFreq * u) + std::sin(kStrongFreq * u) / 3.0);
}

}  // namespace

TEST_CASE("the bath spectral density is a normalized Lorentzian centred at the detuning") {
  const JCParams strong{1.0, 0.2, 0.0};
  const JCParams detuned{1.0, 0.3, 2.4};

  CHECK(spectral_density(strong, 0.0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
  CHECK(spectral_density(detuned, -2.4) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));

  CHECK(spectral_density(detuned, -2.4 + 0.9) ==
        doctest::Approx(spectral_density(detuned, -2.4 - 0.9)).epsilon(1e-12));
  CHECK(spectral_density(detuned, -2.4) > spectral_density(detuned, 0.0));

  for (const JCParams& p : {strong, detuned}) {
    const double width = 800.0 * p.lambda;
    const int steps = 400000;
    const double h = 2.0 * width / steps;
    double integral = 0.0;
    for (int k = 0; k <= steps; ++k) {
      const double x = -p.delta - width + k * h;
      const double f = spectral_density(p, x);
      integral += (k == 0 || k == steps) ? 0.5 * f * h : f * h;
    }
    CHECK(std::abs(integral - p.gamma * p.lambda / 2.0) < 0.005 * p.gamma * p.lambda / 2.0);
  }
}

TEST_CASE("the closed-form kernel matches the resonant analytic solution") {
  const JCParams p{1.0, 0.2, 0.0};
  for (double u : uniform_grid(10.0, 41)) {
    const Complex g = kernel_amplitude_closed_form(p, u);
    CHECK(std::abs(g - Complex(strong_amplitude(u))) < 1e-12);
  }
}

TEST_CASE("the integrated kernel agrees with the closed form in both regimes") {
  const std::vector<double> grid = uniform_grid(10.0, 101);
  for (const JCParams& p : {JCParams{1.0, 0.2, 0.0}, JCParams{1.0, 0.3, 2.4}}) {
    const std::vector<Complex> ode = kernel_amplitude(p, grid);
    REQUIRE(ode.size() == grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Complex cf = kernel_amplitude_closed_form(p, grid[k]);
      CHECK(std::abs(std::norm(ode[k]) - std::norm(cf)) < 1e-8);
    }
  }
}

TEST_CASE("the kernel starts at one with zero slope") {
  for (const JCParams& p : {JCParams{1.0, 0.2, 0.0}, JCParams{1.0, 0.3, 2.4}}) {
    CHECK(std::abs(kernel_amplitude_closed_form(p, 0.0) - Complex(1.0)) < 1e-14);
    const double h = 1e-5;
    const Complex near = kernel_amplitude_closed_form(p, h);
    CHECK(std::abs(near - Complex(1.0)) < 1e-8);
  }
}

TEST_CASE("a wide bath reproduces the memoryless exponential at unit time") {
  const JCParams p{1.0, 100.0, 0.0};
  const double rho = std::norm(kernel_amplitude_closed_form(p, 1.0));
  CHECK(std::abs(rho - std::exp(-1.0)) / std::exp(-1.0) < 0.02);

  for (double u : uniform_grid(1.0, 11)) {
    if (u == 0.0) continue;
    const double r = std::norm(kernel_amplitude_closed_form(p, u));
    CHECK(std::abs(r - std::exp(-u)) / std::exp(-u) < 0.02);
  }
}

TEST_CASE("narrower baths sit farther from the memoryless limit") {
  double previous = 0.0;
  for (double lam : {100.0, 30.0, 10.0}) {
    const JCParams p{1.0, lam, 0.0};
    const double err = std::abs(std::norm(kernel_amplitude_closed_form(p, 1.0)) - std::exp(-1.0));
    CHECK(err > previous);
    previous = err;
  }
}

TEST_CASE("exact populations scale with the initial excited population") {
  const JCParams p{1.0, 0.2, 0.0};
  const std::vector<double> grid = uniform_grid(10.0, 21);
  const PopulationSeries full = exact_populations(p, grid, 1.0);
  const PopulationSeries half = exact_populations(p, grid, 0.5);
  REQUIRE(full.excited.size() == grid.size());
  CHECK(full.excited[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(half.excited[0] == doctest::Approx(0.5).epsilon(1e-10));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(std::abs(half.excited[k] - 0.5 * full.excited[k]) < 1e-10);
    CHECK(std::abs(full.ground[k] + full.excited[k] - 1.0) < 1e-12);
    CHECK(full.excited[k] >= -1e-12);
    CHECK(full.excited[k] <= 1.0 + 1e-12);
  }
}

TEST_CASE("the resonant population series shows a recurrence") {
  const JCParams p{1.0, 0.2, 0.0};
  const std::vector<double> grid = uniform_grid(10.0, 101);
  const PopulationSeries s = exact_populations(p, grid, 1.0);
  std::size_t argmin = 0;
  for (std::size_t k = 1; k < s.excited.size(); ++k)
    if (s.excited[k] < s.excited[argmin]) argmin = k;
  CHECK(argmin > 0);
  CHECK(argmin < s.excited.size() - 1);
  double later_max = 0.0;
  for (std::size_t k = argmin; k < s.excited.size(); ++k)
    later_max = std::max(later_max, s.excited[k]);
  CHECK(later_max > s.excited[argmin] + 0.05);
  CHECK(grid[argmin] == doctest::Approx(6.3).epsilon(0.05));
}

TEST_CASE("oracle parameter validation rejects malformed input") {
  const std::vector<double> grid = uniform_grid(1.0, 5);
  CHECK_THROWS_AS(exact_populations(JCParams{1.0, 0.2, 0.0}, grid, 1.5), Error);
  CHECK_THROWS_AS(exact_populations(JCParams{1.0, -0.2, 0.0}, grid, 1.0), Error);
  CHECK_THROWS_AS(exact_populations(JCParams{-1.0, 0.2, 0.0}, grid, 1.0), Error);
  CHECK_THROWS_AS(exact_populations(JCParams{1.0, 0.2, 0.0}, {0.5, 0.2}, 1.0), Error);
  CHECK_THROWS_AS(exact_populations(JCParams{1.0, 0.2, 0.0}, {-0.5, 0.2}, 1.0), Error);
  CHECK_THROWS_AS(exact_populations(JCParams{1.0, 0.2, 0.0}, {}, 1.0), Error);
  try {
    exact_populations(JCParams{1.0, 0.2, 0.0}, grid, -0.1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadConfig);
  }
}
