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

#include "eltqc/channels.hpp"

#include <cmath>

#include "eltqc/linalg.hpp"

namespace eltqc {

void validate_density(const ComplexMatrix& d, double tol) {
  require_square(d, "density matrix");
  if (!all_finite(d))
    fail(ErrorKind::InvalidDensityMatrix, "non-finite entries");
  if (hermiticity_defect(d) > tol)
    fail(ErrorKind::InvalidDensityMatrix, "not Hermitian within tol");
  const double trace_error = std::abs(d.trace() - Complex(1.0, 0.0));
  if (trace_error > tol)
    fail(ErrorKind::InvalidDensityMatrix,
         "trace differs from 1 by " + std::to_string(trace_error));
  const EigenSystem eig = hermitian_eig(d, tol);
  if (eig.values(eig.values.size() - 1) < -tol)
    fail(ErrorKind::InvalidDensityMatrix,
         "negative eigenvalue " +
             std::to_string(eig.values(eig.values.size() - 1)));
}

void validate_kraus(const KrausMap& map, double tol) {
  if (map.operators.empty())
    fail(ErrorKind::DimensionMismatch, "Kraus map has no operators");
  ComplexMatrix sum = ComplexMatrix::Zero(map.dim, map.dim);
  for (const ComplexMatrix& op : map.operators) {
    if (op.rows() != map.dim || op.cols() != map.dim)
      fail(ErrorKind::DimensionMismatch, "operator dimension mismatch");
    sum += op.adjoint() * op;
    // largest singular value via the top eigenvalue of M†M
    const EigenSystem eig = hermitian_eig(
        static_cast<ComplexMatrix>(op.adjoint() * op), 1e-10);
    if (std::sqrt(std::max(0.0, eig.values(0))) > 1.0 + tol)
      fail(ErrorKind::NotContraction, "Kraus operator is not a contraction");
  }
  if (max_abs_diff(sum, identity(map.dim)) > tol)
    fail(ErrorKind::DimensionMismatch, "completeness violated");
}

KrausMap amplitude_damping_kraus(double gamma_t) {
  if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t))
    fail(ErrorKind::NegativeTime,
         "gamma_t must be finite and nonnegative, got " +
             std::to_string(gamma_t));
  const double survival = std::exp(-gamma_t);  // e^{-gamma t}
  KrausMap map;
  map.dim = 2;
  map.time = gamma_t;
  ComplexMatrix m0 = ComplexMatrix::Zero(2, 2);
  m0(0, 0) = 1.0;
  m0(1, 1) = std::sqrt(survival);
  ComplexMatrix m1 = ComplexMatrix::Zero(2, 2);
  m1(0, 1) = std::sqrt(1.0 - survival);
  map.operators = {m0, m1};
  return map;
}

ComplexMatrix apply_channel(const KrausMap& map, const ComplexMatrix& density) {
  if (density.rows() != map.dim || density.cols() != map.dim)
    fail(ErrorKind::DimensionMismatch,
         "density is " + std::to_string(density.rows()) + "x" +
             std::to_string(density.cols()) + ", channel dim is " +
             std::to_string(map.dim));
  validate_density(density);
  ComplexMatrix out = ComplexMatrix::Zero(map.dim, map.dim);
  for (const ComplexMatrix& op : map.operators) out += op * density * op.adjoint();
  return (out + out.adjoint()) / 2.0;
}

namespace {

// Right-hand side of the dissipator part for one jump operator.
ComplexMatrix dissipator(const ComplexMatrix& c, const ComplexMatrix& d) {
  const ComplexMatrix cd_c = c.adjoint() * c;
  return c * d * c.adjoint() - (cd_c * d + d * cd_c) / 2.0;
}

}  // namespace

ComplexMatrix lindblad_propagate(const ChannelSpec& spec,
                                 const ComplexMatrix& hamiltonian,
                                 const ComplexMatrix& density0, double gamma_t,
                                 int steps) {
  if (steps < 1) fail(ErrorKind::BadConfig, "steps must be >= 1");
  if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t))
    fail(ErrorKind::NegativeTime, "gamma_t must be finite and nonnegative");
  require_square(hamiltonian, "Hamiltonian");
  if (hermiticity_defect(hamiltonian) > 1e-10)
    fail(ErrorKind::NotHermitian, "Hamiltonian is not Hermitian");
  if (hamiltonian.rows() != spec.dim || density0.rows() != spec.dim)
    fail(ErrorKind::DimensionMismatch, "operator dimensions disagree");
  validate_density(density0);

  // Jump operators in units of sqrt(rate); amplitude damping uses the
  // lowering operator |0><1|.
  std::vector<ComplexMatrix> jumps;
  switch (spec.kind) {
    case ChannelKind::AmplitudeDamping: {
      ComplexMatrix lower = ComplexMatrix::Zero(spec.dim, spec.dim);
      lower(0, 1) = 1.0;
      jumps.push_back(lower);
      break;
    }
  }

  const Complex minus_i(0.0, -1.0);
  auto rhs = [&](const ComplexMatrix& d) {
    ComplexMatrix out = minus_i * (hamiltonian * d - d * hamiltonian);
    for (const ComplexMatrix& c : jumps) out += dissipator(c, d);
    return out;
  };

  ComplexMatrix d = density0;
  const double h = gamma_t / steps;
  for (int step = 0; step < steps; ++step) {
    const ComplexMatrix k1 = rhs(d);
    const ComplexMatrix k2 = rhs(d + (h / 2.0) * k1);
    const ComplexMatrix k3 = rhs(d + (h / 2.0) * k2);
    const ComplexMatrix k4 = rhs(d + h * k3);
    d += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return (d + d.adjoint()) / 2.0;
}

}  // namespace eltqc
