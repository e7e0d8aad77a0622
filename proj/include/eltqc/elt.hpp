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
#include <vector>

#include "eltqc/channels.hpp"
#include "eltqc/series.hpp"
#include "eltqc/stateprep.hpp"

namespace eltqc {

// One member of the trajectory ensemble. RateScaled members rescale the
// damping argument by rate_multiplier; LagShifted members delay it by lag.
struct TrajectorySpec {
  int index = 0;
  double rate_multiplier = 1.0;  // dimensionless, >= 0
  double lag = 0.0;              // dimensionless gamma*tau, >= 0
};

enum class TrajectoryMode { RateScaled, LagShifted };

struct TrajectoryFamily {
  std::vector<TrajectorySpec> trajectories;
  TrajectoryMode mode = TrajectoryMode::RateScaled;
  ChannelSpec base_channel;
};

// Per-time convex weights over the family: weights[t][i] >= 0 and each
// time slice sums to 1 within 1e-12, which keeps the ensemble state a
// valid density matrix at every grid point.
struct WeightSchedule {
  std::vector<double> times;
  std::vector<std::vector<double>> weights;
};

struct Backend {
  enum class Kind { Statevector, Shots };
  Kind kind = Kind::Statevector;
  long shots = 8192;
  std::uint64_t seed = 0;
  int threads = 1;

  static Backend statevector(int threads = 1) {
    Backend b;
    b.kind = Kind::Statevector;
    b.threads = threads;
    return b;
  }
  static Backend shot_based(long shots, std::uint64_t seed, int threads = 1) {
    Backend b;
    b.kind = Kind::Shots;
    b.shots = shots;
    b.seed = seed;
    b.threads = threads;
    return b;
  }
};

struct PopulationPair {
  double ground = 0.0;
  double excited = 0.0;
};

// Effective damping argument fed to amplitude_damping_kraus:
// RateScaled -> rate_multiplier * t; LagShifted -> max(0, t - lag).
double trajectory_gamma_t(const TrajectorySpec& spec, TrajectoryMode mode, double t);

// rho_k = sum_j w_j sum_i |(U_{M_i} v_j)[k]|^2 for k in {0, 1}, evaluated
// through dilation, state preparation, and circuit simulation. The shots
// backend estimates the squared amplitudes from counts of outcomes 0 and 1
// with a sampling seed derived per (operator, vector) pair.
PopulationPair populations_from_dilation(const KrausMap& map, const VectorEnsemble& ensemble,
                                         const Backend& backend);

// Weighted ensemble series: rho_k(t) = sum_i weights[t][i] * rho_k^{(i)}(t),
// each trajectory evaluated at its own effective damping argument.
// Deterministic for a fixed backend seed regardless of thread count.
PopulationSeries elt_evolve(const TrajectoryFamily& family, const WeightSchedule& schedule,
                            const VectorEnsemble& ensemble, const Backend& backend);

// Rate grid {0} followed by size-1 log-uniform multipliers on
// [kappa_min, kappa_max]; the zero member keeps the undecayed population
// inside the convex hull at every time.
TrajectoryFamily default_rate_family(int size = 25, double kappa_min = 1e-2,
                                     double kappa_max = 10.0);

// Lag grid {t_max} followed by size-1 uniform lags on [0, t_max); the
// full-lag member is the identity-capable one.
TrajectoryFamily default_lag_family(int size, double t_max);

// Uniform gamma*t grid with the given number of points on [0, t_max].
std::vector<double> default_time_grid(double t_max = 10.0, int points = 101);

// Hull reachability for fitting: at least one member must act as the
// identity over the whole grid (zero rate, or lag >= t_max).
void require_identity_capable(const TrajectoryFamily& family, double t_max);

}  // namespace eltqc
