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

#include "eltqc/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eltqc/error.hpp"

namespace eltqc {
namespace {

void validate_pops(const std::vector<std::vector<double>>& pops, std::size_t grid_size) {
  if (pops.size() != grid_size) {
    fail(ErrorKind::GridMismatch, "trajectory population rows do not match the reference grid");
  }
  if (pops.empty() || pops.front().empty()) {
    fail(ErrorKind::EmptyFamily, "trajectory population matrix has no members");
  }
  const std::size_t width = pops.front().size();
  for (const std::vector<double>& row : pops) {
    if (row.size() != width) {
      fail(ErrorKind::GridMismatch, "trajectory population rows have inconsistent width");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        fail(ErrorKind::BadConfig, "trajectory populations must be finite");
      }
    }
  }
}

void validate_reference(const PopulationSeries& reference) {
  if (reference.times.empty() || reference.excited.size() != reference.times.size()) {
    fail(ErrorKind::GridMismatch, "reference series grid is inconsistent");
  }
}

}  // namespace

// KKT structure of the stage-2 problem: the minimum-norm weights on the
// residual-optimal face have the form w_i = max(0, alpha + beta p_i), so the
// support is a prefix or suffix of the p-sorted order and 2N candidate
// supports are exhaustive. The 2x2 system fixes (alpha, beta) from the
// constraints sum w = 1 and sum w_i p_i = y clamped to the hull.
std::vector<double> fit_weight_slice(const std::vector<double>& pops, double reference) {
  const std::size_t n = pops.size();
  if (n == 0) {
    fail(ErrorKind::EmptyFamily, "weight fit needs at least one trajectory");
  }
  const auto [lo_it, hi_it] = std::minmax_element(pops.begin(), pops.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi - lo == 0.0) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }
  const double yc = std::clamp(reference, lo, hi);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&pops](std::size_t a, std::size_t b) { return pops[a] < pops[b]; });

  double best_norm = std::numeric_limits<double>::infinity();
  std::vector<double> best;
  std::vector<double> w(n);
  for (int suffix = 0; suffix < 2; ++suffix) {
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t begin = suffix ? n - k : 0;
      double s1 = 0.0, s2 = 0.0;
      for (std::size_t idx = begin; idx < begin + k; ++idx) {
        const double p = pops[order[idx]];
        s1 += p;
        s2 += p * p;
      }
      const double det = static_cast<double>(k) * s2 - s1 * s1;
      std::fill(w.begin(), w.end(), 0.0);
      if (std::abs(det) < 1e-300) {
        // All support values coincide; feasible only if they hit the target.
        const double p0 = pops[order[begin]];
        if (std::abs(p0 - yc) > 1e-12 * std::max(1.0, std::abs(yc))) continue;
        for (std::size_t idx = begin; idx < begin + k; ++idx) {
          w[order[idx]] = 1.0 / static_cast<double>(k);
        }
      } else {
        const double alpha = (s2 - s1 * yc) / det;
        const double beta = (static_cast<double>(k) * yc - s1) / det;
        bool feasible = true;
        for (std::size_t idx = begin; idx < begin + k; ++idx) {
          const double wi = alpha + beta * pops[order[idx]];
          if (wi < -1e-14) {
            feasible = false;
            break;
          }
          w[order[idx]] = std::max(wi, 0.0);
        }
        if (!feasible) continue;
        for (std::size_t idx = 0; idx < n; ++idx) {
          if (idx >= begin && idx < begin + k) continue;
          if (alpha + beta * pops[order[idx]] > 1e-14) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
      }
      const double sum = std::accumulate(w.begin(), w.end(), 0.0);
      double norm2 = 0.0;
      for (double& wi : w) {
        wi /= sum;
        norm2 += wi * wi;
      }
      if (norm2 < best_norm - 1e-15) {
        best_norm = norm2;
        best = w;
      }
    }
  }
  return best;
}

WeightSchedule fit_weights(const std::vector<std::vector<double>>& trajectory_pops,
                           const PopulationSeries& reference, double reg) {
  validate_reference(reference);
  validate_pops(trajectory_pops, reference.times.size());
  if (!std::isfinite(reg) || reg < 0.0) {
    fail(ErrorKind::BadConfig, "regularization must be nonnegative");
  }
  WeightSchedule schedule;
  schedule.times = reference.times;
  schedule.weights.reserve(trajectory_pops.size());
  for (std::size_t t = 0; t < trajectory_pops.size(); ++t) {
    schedule.weights.push_back(fit_weight_slice(trajectory_pops[t], reference.excited[t]));
  }
  return schedule;
}

FitReport fit_report(const WeightSchedule& schedule,
                     const std::vector<std::vector<double>>& trajectory_pops,
                     const PopulationSeries& reference) {
  validate_reference(reference);
  validate_pops(trajectory_pops, reference.times.size());
  if (schedule.times.size() != reference.times.size() ||
      schedule.weights.size() != schedule.times.size()) {
    fail(ErrorKind::GridMismatch, "schedule grid does not match the reference");
  }
  FitReport report;
  report.times = reference.times;
  const std::size_t nt = reference.times.size();
  report.residuals.reserve(nt);
  report.hull_min.reserve(nt);
  report.hull_max.reserve(nt);
  report.outside_hull.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    const std::vector<double>& row = trajectory_pops[t];
    if (schedule.weights[t].size() != row.size()) {
      fail(ErrorKind::GridMismatch, "schedule width does not match the family");
    }
    double pred = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) pred += schedule.weights[t][i] * row[i];
    const auto [lo_it, hi_it] = std::minmax_element(row.begin(), row.end());
    const double y = reference.excited[t];
    report.residuals.push_back(std::abs(pred - y));
    report.hull_min.push_back(*lo_it);
    report.hull_max.push_back(*hi_it);
    report.outside_hull.push_back(y < *lo_it - 1e-12 || y > *hi_it + 1e-12 ? 1 : 0);
  }
  return report;
}

}  // namespace eltqc
