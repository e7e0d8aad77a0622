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

#include "eltqc/jcref.hpp"

#include <cmath>
#include <complex>

#include "eltqc/error.hpp"

namespace eltqc {
namespace {

constexpr double kPi = 3.14159265358979323846;
// RK4 substep target: 1e4 steps across a [0, 10] grid.
constexpr double kStepTarget = 1e-3;

void validate_params(const JCParams& p) {
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) {
    fail(ErrorKind::BadConfig, "oracle requires gamma > 0");
  }
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
    fail(ErrorKind::BadConfig, "oracle requires lambda > 0");
  }
  if (!std::isfinite(p.delta)) {
    fail(ErrorKind::BadConfig, "oracle requires finite detuning");
  }
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) {
    fail(ErrorKind::BadConfig, "oracle grid is empty");
  }
  double prev = 0.0;
  for (double t : grid) {
    if (!std::isfinite(t) || t < 0.0) {
      fail(ErrorKind::BadConfig, "oracle grid must be nonnegative and finite");
    }
    if (t < prev) {
      fail(ErrorKind::BadConfig, "oracle grid must be nondecreasing");
    }
    prev = t;
  }
}

struct KernelState {
  Complex g, b;
};

// dG/du = -(lambda'/2) B, dB/du = G - c B with c = lambda' - i delta'.
KernelState derivative(const KernelState& s, double lam, Complex c) {
  return {-(lam / 2.0) * s.b, s.g - c * s.b};
}

KernelState rk4_step(const KernelState& s, double h, double lam, Complex c) {
  const KernelState k1 = derivative(s, lam, c);
  const KernelState k2 = derivative({s.g + 0.5 * h * k1.g, s.b + 0.5 * h * k1.b}, lam, c);
  const KernelState k3 = derivative({s.g + 0.5 * h * k2.g, s.b + 0.5 * h * k2.b}, lam, c);
  const KernelState k4 = derivative({s.g + h * k3.g, s.b + h * k3.b}, lam, c);
  return {s.g + (h / 6.0) * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g),
          s.b + (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b)};
}

}  // namespace

double spectral_density(const JCParams& p, double omega_minus_omega0) {
  validate_params(p);
  const double num = p.gamma * p.lambda * p.lambda;
  const double shifted = p.delta + omega_minus_omega0;
  return num / (2.0 * kPi * (shifted * shifted + p.lambda * p.lambda));
}

std::vector<Complex> kernel_amplitude(const JCParams& p, const std::vector<double>& grid) {
  validate_params(p);
  validate_grid(grid);
  const double lam = p.lambda / p.gamma;
  const Complex c{lam, -p.delta / p.gamma};
  std::vector<Complex> out;
  out.reserve(grid.size());
  KernelState s{1.0, 0.0};
  double u = 0.0;
  for (double target : grid) {
    const double span = target - u;
    if (span > 0.0) {
      const int nsub = static_cast<int>(std::ceil(span / kStepTarget));
      const double h = span / nsub;
      for (int k = 0; k < nsub; ++k) s = rk4_step(s, h, lam, c);
      u = target;
    }
    out.push_back(s.g);
  }
  return out;
}

Complex kernel_amplitude_closed_form(const JCParams& p, double gamma_t) {
  validate_params(p);
  if (!std::isfinite(gamma_t) || gamma_t < 0.0) {
    fail(ErrorKind::BadConfig, "oracle time must be nonnegative and finite");
  }
  const double lam = p.lambda / p.gamma;
  const Complex c{lam, -p.delta / p.gamma};
  const double u = gamma_t;
  const Complex d2 = c * c - 2.0 * lam;
  const Complex d = std::sqrt(d2);
  const Complex z = d * (u / 2.0);
  if (std::abs(z) < 0.5) {
    // cosh(z) and sinh(z)/z are even in z, so they depend on d only
    // through d^2 and the branch of the square root cancels.
    const Complex z2 = z * z;
    Complex cosh_sum = 1.0, cosh_term = 1.0;
    Complex sinhc_sum = 1.0, sinhc_term = 1.0;
    for (int k = 1; k < 24; ++k) {
      cosh_term *= z2 / static_cast<double>((2 * k - 1) * (2 * k));
      sinhc_term *= z2 / static_cast<double>((2 * k) * (2 * k + 1));
      cosh_sum += cosh_term;
      sinhc_sum += sinhc_term;
      if (std::abs(cosh_term) < 1e-20 && std::abs(sinhc_term) < 1e-20) break;
    }
    return std::exp(-c * (u / 2.0)) * (cosh_sum + c * (u / 2.0) * sinhc_sum);
  }
  // Exponential arrangement of cosh/sinh; both exponents have nonpositive
  // real part for this dissipative kernel, so nothing overflows.
  return ((d + c) / (2.0 * d)) * std::exp((d - c) * (u / 2.0)) +
         ((d - c) / (2.0 * d)) * std::exp(-(d + c) * (u / 2.0));
}

PopulationSeries exact_populations(const JCParams& p, const std::vector<double>& grid,
                                   double rho11_0) {
  if (!(rho11_0 >= 0.0 && rho11_0 <= 1.0)) {
    fail(ErrorKind::BadConfig, "initial excited population must lie in [0, 1]");
  }
  const std::vector<Complex> g = kernel_amplitude(p, grid);
  PopulationSeries out;
  out.times = grid;
  out.source = SeriesSource::exact();
  out.ground.reserve(grid.size());
  out.excited.reserve(grid.size());
  for (const Complex& gi : g) {
    const double rho11 = std::norm(gi) * rho11_0;
    out.excited.push_back(rho11);
    out.ground.push_back(1.0 - rho11);
  }
  return out;
}

}  // namespace eltqc
