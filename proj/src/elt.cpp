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

#include "eltqc/elt.hpp"

#include <algorithm>
#include <cmath>

#include "eltqc/circuit.hpp"
#include "eltqc/dilation.hpp"
#include "eltqc/error.hpp"
#include "eltqc/parallel.hpp"
#include "eltqc/rng.hpp"
#include "eltqc/synthesis.hpp"

namespace eltqc {
namespace {

void validate_family(const TrajectoryFamily& family) {
  if (family.trajectories.empty()) {
    fail(ErrorKind::EmptyFamily, "trajectory family is empty");
  }
  for (const TrajectorySpec& s : family.trajectories) {
    if (!std::isfinite(s.rate_multiplier) || s.rate_multiplier < 0.0) {
      fail(ErrorKind::BadConfig, "trajectory rate multipliers must be >= 0");
    }
    if (!std::isfinite(s.lag) || s.lag < 0.0) {
      fail(ErrorKind::BadConfig, "trajectory lags must be >= 0");
    }
  }
}

void validate_schedule(const WeightSchedule& schedule, std::size_t family_size) {
  if (schedule.times.empty()) {
    fail(ErrorKind::WeightGridMismatch, "weight schedule has no time points");
  }
  if (schedule.weights.size() != schedule.times.size()) {
    fail(ErrorKind::WeightGridMismatch, "weight rows do not match the time grid");
  }
  for (const std::vector<double>& slice : schedule.weights) {
    if (slice.size() != family_size) {
      fail(ErrorKind::WeightGridMismatch, "weight slice width does not match the family");
    }
    double sum = 0.0;
    for (double w : slice) {
      if (!std::isfinite(w) || w < -1e-12) {
        fail(ErrorKind::BadConfig, "weights must be nonnegative");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      fail(ErrorKind::BadConfig, "each weight slice must sum to 1");
    }
  }
}

void validate_ensemble(const VectorEnsemble& ensemble) {
  if (ensemble.vectors.empty()) {
    fail(ErrorKind::BadConfig, "vector ensemble is empty");
  }
  if (ensemble.weights.size() != ensemble.vectors.size()) {
    fail(ErrorKind::DimensionMismatch, "ensemble weights do not match its vectors");
  }
  if (ensemble.system_dim != 2) {
    fail(ErrorKind::TooWide, "circuit path covers two-dimensional systems only");
  }
  double sum = 0.0;
  for (double w : ensemble.weights) {
    if (!std::isfinite(w) || w < -1e-12) {
      fail(ErrorKind::BadConfig, "ensemble weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    fail(ErrorKind::BadConfig, "ensemble weights must sum to 1");
  }
}

}  // namespace

double trajectory_gamma_t(const TrajectorySpec& spec, TrajectoryMode mode, double t) {
  if (!std::isfinite(t) || t < 0.0) {
    fail(ErrorKind::NegativeTime, "trajectory evaluation time must be >= 0");
  }
  if (mode == TrajectoryMode::RateScaled) {
    return spec.rate_multiplier * t;
  }
  return std::max(0.0, t - spec.lag);
}

PopulationPair populations_from_dilation(const KrausMap& map, const VectorEnsemble& ensemble,
                                         const Backend& backend) {
  if (map.dim != 2) {
    fail(ErrorKind::TooWide, "circuit path covers single-qubit channels only");
  }
  validate_ensemble(ensemble);
  const std::vector<DilatedUnitary> dilated = dilate_channel(map);
  ComplexVector zero_state = ComplexVector::Zero(4);
  zero_state(0) = 1.0;
  PopulationPair out;
  for (std::size_t j = 0; j < ensemble.vectors.size(); ++j) {
    const double wj = ensemble.weights[j];
    for (std::size_t i = 0; i < dilated.size(); ++i) {
      const Circuit circuit = prep_and_apply(dilated[i], ensemble.vectors[j]);
      if (backend.kind == Backend::Kind::Statevector) {
        const ComplexVector psi = simulate(circuit, zero_state);
        out.ground += wj * std::norm(psi(0));
        out.excited += wj * std::norm(psi(1));
      } else {
        const std::uint64_t seed =
            derive_seed(backend.seed, {static_cast<std::uint64_t>(i),
                                       static_cast<std::uint64_t>(j)});
        const ShotResult res = sample(circuit, zero_state, backend.shots, seed);
        const auto count_of = [&res](int state) {
          const auto it = res.counts.find(state);
          return it == res.counts.end() ? 0.0 : static_cast<double>(it->second);
        };
        out.ground += wj * count_of(0) / static_cast<double>(res.shots);
        out.excited += wj * count_of(1) / static_cast<double>(res.shots);
      }
    }
  }
  return out;
}

PopulationSeries elt_evolve(const TrajectoryFamily& family, const WeightSchedule& schedule,
                            const VectorEnsemble& ensemble, const Backend& backend) {
  validate_family(family);
  validate_schedule(schedule, family.trajectories.size());
  validate_ensemble(ensemble);
  if (backend.kind == Backend::Kind::Shots && backend.shots < 1) {
    fail(ErrorKind::BadConfig, "shot backend requires at least one shot");
  }

  const std::size_t nt = schedule.times.size();
  const std::size_t ntraj = family.trajectories.size();
  std::vector<PopulationPair> partial(nt * ntraj);

  // Each (time, trajectory) cell is independent; cells write disjoint slots
  // and draw index-derived seeds, so the result is schedule-independent.
  parallel_for(nt * ntraj, backend.threads, [&](std::size_t task) {
    const std::size_t t_idx = task / ntraj;
    const std::size_t i = task % ntraj;
    const double gt =
        trajectory_gamma_t(family.trajectories[i], family.mode, schedule.times[t_idx]);
    const KrausMap map = amplitude_damping_kraus(gt);
    Backend cell = backend;
    cell.threads = 1;
    cell.seed = derive_seed(backend.seed,
                            {static_cast<std::uint64_t>(t_idx), static_cast<std::uint64_t>(i)});
    partial[task] = populations_from_dilation(map, ensemble, cell);
  });

  PopulationSeries out;
  out.times = schedule.times;
  out.source = backend.kind == Backend::Kind::Statevector
                   ? SeriesSource::statevector()
                   : SeriesSource::shot_based(backend.shots, backend.seed);
  out.ground.resize(nt, 0.0);
  out.excited.resize(nt, 0.0);
  for (std::size_t t_idx = 0; t_idx < nt; ++t_idx) {
    for (std::size_t i = 0; i < ntraj; ++i) {
      const double w = schedule.weights[t_idx][i];
      out.ground[t_idx] += w * partial[t_idx * ntraj + i].ground;
      out.excited[t_idx] += w * partial[t_idx * ntraj + i].excited;
    }
  }
  return out;
}

TrajectoryFamily default_rate_family(int size, double kappa_min, double kappa_max) {
  if (size < 2) {
    fail(ErrorKind::BadConfig, "rate family needs at least two members");
  }
  if (!(kappa_min > 0.0) || !(kappa_max >= kappa_min)) {
    fail(ErrorKind::BadConfig, "rate family needs 0 < kappa_min <= kappa_max");
  }
  TrajectoryFamily family;
  family.mode = TrajectoryMode::RateScaled;
  family.trajectories.reserve(size);
  family.trajectories.push_back({0, 0.0, 0.0});
  const double lo = std::log10(kappa_min);
  const double hi = std::log10(kappa_max);
  const int m = size - 1;
  for (int k = 0; k < m; ++k) {
    const double e = m == 1 ? lo : lo + (hi - lo) * k / (m - 1);
    family.trajectories.push_back({k + 1, std::pow(10.0, e), 0.0});
  }
  return family;
}

TrajectoryFamily default_lag_family(int size, double t_max) {
  if (size < 2) {
    fail(ErrorKind::BadConfig, "lag family needs at least two members");
  }
  if (!(t_max > 0.0)) {
    fail(ErrorKind::BadConfig, "lag family needs t_max > 0");
  }
  TrajectoryFamily family;
  family.mode = TrajectoryMode::LagShifted;
  family.trajectories.reserve(size);
  family.trajectories.push_back({0, 1.0, t_max});
  const int m = size - 1;
  for (int k = 0; k < m; ++k) {
    family.trajectories.push_back({k + 1, 1.0, t_max * k / m});
  }
  return family;
}

std::vector<double> default_time_grid(double t_max, int points) {
  if (points < 1 || !(t_max >= 0.0)) {
    fail(ErrorKind::BadConfig, "time grid needs t_max >= 0 and at least one point");
  }
  std::vector<double> grid(points);
  for (int k = 0; k < points; ++k) {
    grid[k] = points == 1 ? 0.0 : t_max * k / (points - 1);
  }
  return grid;
}

void require_identity_capable(const TrajectoryFamily& family, double t_max) {
  validate_family(family);
  for (const TrajectorySpec& s : family.trajectories) {
    if (family.mode == TrajectoryMode::RateScaled && s.rate_multiplier == 0.0) return;
    if (family.mode == TrajectoryMode::LagShifted && s.lag >= t_max - 1e-12) return;
  }
  fail(ErrorKind::BadConfig, "family lacks an identity-capable trajectory");
}

}  // namespace eltqc
