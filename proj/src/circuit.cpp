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

#include "eltqc/circuit.hpp"

#include <cmath>

#include "eltqc/linalg.hpp"
#include "eltqc/rng.hpp"

namespace eltqc {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::U4: return "U4";
  }
  return "?";
}

Gate Gate::x(int q) { return Gate{GateKind::X, {q}, 0.0, {}}; }
Gate Gate::z(int q) { return Gate{GateKind::Z, {q}, 0.0, {}}; }
Gate Gate::h(int q) { return Gate{GateKind::H, {q}, 0.0, {}}; }

Gate Gate::ry(int q, double theta) {
  if (!std::isfinite(theta))
    fail(ErrorKind::NonUnitGate, "RY angle must be finite");
  return Gate{GateKind::RY, {q}, theta, {}};
}

Gate Gate::rz(int q, double theta) {
  if (!std::isfinite(theta))
    fail(ErrorKind::NonUnitGate, "RZ angle must be finite");
  return Gate{GateKind::RZ, {q}, theta, {}};
}

Gate Gate::cnot(int control, int target) {
  return Gate{GateKind::CNOT, {control, target}, 0.0, {}};
}

Gate Gate::u4(int qa, int qb, ComplexMatrix m) {
  if (m.rows() != 4 || m.cols() != 4)
    fail(ErrorKind::DimensionMismatch, "U4 matrix must be 4x4");
  if (unitarity_defect(m) > 1e-10)
    fail(ErrorKind::NonUnitGate, "U4 matrix is not unitary within 1e-10");
  return Gate{GateKind::U4, {qa, qb}, 0.0, std::move(m)};
}

ComplexMatrix ry_matrix(double theta) {
  ComplexMatrix m(2, 2);
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  m << c, -s, s, c;
  return m;
}

ComplexMatrix rz_matrix(double theta) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0.0, -theta / 2.0));
  m(1, 1) = std::exp(Complex(0.0, theta / 2.0));
  return m;
}

namespace {

void check_gate(const Gate& g, int width) {
  const std::size_t arity = (g.kind == GateKind::CNOT || g.kind == GateKind::U4)
                                ? 2 : 1;
  if (g.qubits.size() != arity)
    fail(ErrorKind::DimensionMismatch, std::string(to_string(g.kind)) +
                                           " expects " + std::to_string(arity) +
                                           " qubit indices");
  for (int q : g.qubits)
    if (q < 0 || q >= width)
      fail(ErrorKind::DimensionMismatch,
           "qubit index " + std::to_string(q) + " outside width " +
               std::to_string(width));
  if (arity == 2 && g.qubits[0] == g.qubits[1])
    fail(ErrorKind::DimensionMismatch, "two-qubit gate needs distinct qubits");
}

void apply_single(ComplexVector& state, int q, const ComplexMatrix& m) {
  const Eigen::Index dim = state.size();
  const Eigen::Index stride = Eigen::Index(1) << q;
  for (Eigen::Index base = 0; base < dim; base += 2 * stride)
    for (Eigen::Index offset = 0; offset < stride; ++offset) {
      const Eigen::Index i0 = base + offset;
      const Eigen::Index i1 = i0 + stride;
      const Complex a0 = state(i0), a1 = state(i1);
      state(i0) = m(0, 0) * a0 + m(0, 1) * a1;
      state(i1) = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

void apply_cnot(ComplexVector& state, int control, int target) {
  const Eigen::Index dim = state.size();
  const Eigen::Index cbit = Eigen::Index(1) << control;
  const Eigen::Index tbit = Eigen::Index(1) << target;
  for (Eigen::Index i = 0; i < dim; ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(state(i), state(i | tbit));
}

void apply_u4(ComplexVector& state, int qa, int qb, const ComplexMatrix& m) {
  const Eigen::Index dim = state.size();
  const Eigen::Index abit = Eigen::Index(1) << qa;
  const Eigen::Index bbit = Eigen::Index(1) << qb;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & abit) || (i & bbit)) continue;  // visit each 4-orbit once
    // local index = bit(qa) + 2*bit(qb)
    const Eigen::Index idx[4] = {i, i | abit, i | bbit, i | abit | bbit};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = state(idx[k]);
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += m(r, k) * in[k];
      state(idx[r]) = acc;
    }
  }
}

void apply_gate(ComplexVector& state, const Gate& g) {
  static const ComplexMatrix x_mat = [] {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const ComplexMatrix z_mat = [] {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  static const ComplexMatrix h_mat = [] {
    ComplexMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
  }();
  switch (g.kind) {
    case GateKind::X: apply_single(state, g.qubits[0], x_mat); break;
    case GateKind::Z: apply_single(state, g.qubits[0], z_mat); break;
    case GateKind::H: apply_single(state, g.qubits[0], h_mat); break;
    case GateKind::RY: apply_single(state, g.qubits[0], ry_matrix(g.angle)); break;
    case GateKind::RZ: apply_single(state, g.qubits[0], rz_matrix(g.angle)); break;
    case GateKind::CNOT: apply_cnot(state, g.qubits[0], g.qubits[1]); break;
    case GateKind::U4: apply_u4(state, g.qubits[0], g.qubits[1], g.matrix); break;
  }
}

}  // namespace

ComplexVector simulate(const Circuit& c, const ComplexVector& input) {
  if (c.width < 1 || c.width > 24)
    fail(ErrorKind::TooWide, "width must be in [1, 24]");
  const Eigen::Index dim = Eigen::Index(1) << c.width;
  if (input.size() != dim)
    fail(ErrorKind::DimensionMismatch,
         "input has " + std::to_string(input.size()) + " amplitudes, expected " +
             std::to_string(dim));
  if (!all_finite(input) || std::abs(input.norm() - 1.0) > 1e-10)
    fail(ErrorKind::InvalidDensityMatrix, "input statevector must be unit norm");
  for (const Gate& g : c.gates) check_gate(g, c.width);

  ComplexVector state = input;
  for (const Gate& g : c.gates) apply_gate(state, g);
  return state;
}

ShotResult sample(const Circuit& c, const ComplexVector& input, long shots,
                  std::uint64_t seed) {
  if (shots < 1) fail(ErrorKind::BadConfig, "shots must be >= 1");
  const ComplexVector state = simulate(c, input);

  std::vector<double> cdf(state.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    acc += std::norm(state(i));
    cdf[i] = acc;
  }
  for (double& p : cdf) p /= acc;  // guard the O(1e-16) norm drift
  cdf.back() = 1.0;

  ShotResult result;
  result.shots = shots;
  result.seed = seed;
  Rng rng(seed);
  for (long s = 0; s < shots; ++s)
    result.counts[static_cast<int>(rng.categorical(cdf))]++;
  return result;
}

ComplexMatrix circuit_unitary(const Circuit& c) {
  if (c.width < 1) fail(ErrorKind::TooWide, "width must be >= 1");
  if (c.width > 4) fail(ErrorKind::TooWide, "circuit_unitary supports width <= 4");
  const Eigen::Index dim = Eigen::Index(1) << c.width;
  for (const Gate& g : c.gates) check_gate(g, c.width);

  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    ComplexVector basis_col = u.col(col);
    for (const Gate& g : c.gates) apply_gate(basis_col, g);
    u.col(col) = basis_col;
  }
  return u;
}

}  // namespace eltqc
