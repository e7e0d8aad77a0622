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

#include "eltqc/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "eltqc/error.hpp"
#include "eltqc/linalg.hpp"
#include "eltqc/rng.hpp"

namespace eltqc {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi / 2.0;
constexpr double kPi4 = kPi / 4.0;
constexpr double kTwoPi = 2.0 * kPi;
// Rotations with |angle| below this are omitted from emitted circuits.
constexpr double kAngleTol = 1e-12;

const Complex kI{0.0, 1.0};

// exp(i t X)
ComplexMatrix exp_ix(double t) {
  ComplexMatrix m(2, 2);
  m << std::cos(t), kI * std::sin(t), kI * std::sin(t), std::cos(t);
  return m;
}

// exp(i t Z)
ComplexMatrix exp_iz(double t) {
  ComplexMatrix m(2, 2);
  m << std::exp(kI * t), 0.0, 0.0, std::exp(-kI * t);
  return m;
}

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m << s, s, s, -s;
  return m;
}

// Magic basis: columns are Bell states up to phases; conjugation by it maps
// SU(2)xSU(2) to SO(4) and diagonalizes XX, YY, ZZ simultaneously.
ComplexMatrix magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix b(4, 4);
  b << s, kI * s, 0.0, 0.0,
       0.0, 0.0, kI * s, s,
       0.0, 0.0, kI * s, -s,
       s, -kI * s, 0.0, 0.0;
  return b;
}

double rem(double x, double m) { return x - m * std::floor(x / m); }

// Real-orthogonal P with P^T M2 P diagonal, for unitary complex-symmetric M2.
// Real and imaginary parts commute, so a generic real mixture of the two has
// the shared eigenbasis; a few fixed mixtures followed by seeded random ones
// make the search deterministic.
struct SymDiag {
  Eigen::MatrixXd p;
  std::array<Complex, 4> d;
};

SymDiag diag_complex_symmetric(const ComplexMatrix& m2) {
  Eigen::MatrixXd re(4, 4), im(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      re(r, c) = m2(r, c).real();
      im(r, c) = m2(r, c).imag();
    }
  }
  re = ((re + re.transpose()) / 2.0).eval();
  im = ((im + im.transpose()) / 2.0).eval();
  const std::array<double, 5> trial{0.0, 1.0, 0.5, 0.31830988618, 2.0};
  Rng noise(7);
  for (int k = 0; k < 64; ++k) {
    const double t = k < static_cast<int>(trial.size()) ? trial[k] : noise.normal();
    const Eigen::MatrixXd mix = re * std::cos(t) + im * std::sin(t);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mix);
    Eigen::MatrixXd p = es.eigenvectors();
    ComplexMatrix pc = p.cast<Complex>();
    ComplexMatrix dm = pc.transpose() * m2 * pc;
    double off = 0.0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (r != c) off = std::max(off, std::abs(dm(r, c)));
      }
    }
    if (off < 1e-11) {
      if (p.determinant() < 0.0) p.col(3) *= -1.0;
      pc = p.cast<Complex>();
      dm = pc.transpose() * m2 * pc;
      return {p, {dm(0, 0), dm(1, 1), dm(2, 2), dm(3, 3)}};
    }
  }
  fail(ErrorKind::NotUnitary, "canonical form: simultaneous diagonalization failed");
}

// K = e^{i phase} kron(left, right) with left, right in SU(2).
struct ProductParts {
  ComplexMatrix left, right;
  double phase = 0.0;
};

ProductParts decompose_product(const ComplexMatrix& k) {
  // Reshuffle so a tensor product becomes a rank-one matrix.
  ComplexMatrix r(4, 4);
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int c1 = 0; c1 < 2; ++c1) {
      for (int r0 = 0; r0 < 2; ++r0) {
        for (int c0 = 0; c0 < 2; ++c0) {
          r(r1 * 2 + c1, r0 * 2 + c0) = k(r0 + 2 * r1, c0 + 2 * c1);
        }
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(0) < 2.0 - 1e-6 || s(1) > 1e-8) {
    fail(ErrorKind::NotUnitary, "canonical form: local factor extraction failed");
  }
  ComplexMatrix left(2, 2);
  left << svd.matrixU()(0, 0), svd.matrixU()(1, 0),
          svd.matrixU()(2, 0), svd.matrixU()(3, 0);
  left *= std::sqrt(2.0);
  const Complex dl = left(0, 0) * left(1, 1) - left(0, 1) * left(1, 0);
  left /= std::sqrt(dl);
  ComplexMatrix mfull = kron(left, identity(2)).adjoint() * k;
  ComplexMatrix right_eff = mfull.block(0, 0, 2, 2);
  if ((mfull.block(2, 2, 2, 2) - right_eff).cwiseAbs().maxCoeff() > 1e-7) {
    fail(ErrorKind::NotUnitary, "canonical form: local factor split inconsistent");
  }
  const Complex dr = right_eff(0, 0) * right_eff(1, 1) - right_eff(0, 1) * right_eff(1, 0);
  const double phi = std::arg(dr) / 2.0;
  ComplexMatrix right = right_eff * std::exp(-kI * phi);
  return {left, right, phi};
}

void emit_single(std::vector<Gate>& gates, int q, const ComplexMatrix& m, double& phase) {
  const ZyzAngles z = zyz_decompose(m);
  phase += z.phase;
  if (std::abs(z.gamma) > kAngleTol) gates.push_back(Gate::rz(q, z.gamma));
  if (std::abs(z.beta) > kAngleTol) gates.push_back(Gate::ry(q, z.beta));
  if (std::abs(z.alpha) > kAngleTol) gates.push_back(Gate::rz(q, z.alpha));
}

// Emits one of the four canonical-point templates (0, 1, 2, or 3 CNOTs).
// Layers are listed in application order; per-wire 2x2 blocks are merged
// before the ZYZ emission.
SynthesisReport emit_template(const ComplexMatrix& u, const WeylDecomposition& w,
                              int cnots) {
  const ComplexMatrix h = hadamard();
  const ComplexMatrix v = exp_ix(kPi4);
  const ComplexMatrix vdag = v.adjoint();
  std::vector<Gate> gates;
  double phase = w.phase;
  switch (cnots) {
    case 0:
      gates.reserve(6);
      emit_single(gates, 1, ComplexMatrix(w.k1l * w.k2l), phase);
      emit_single(gates, 0, ComplexMatrix(w.k1r * w.k2r), phase);
      break;
    case 1:
      phase -= kPi4;
      emit_single(gates, 1, ComplexMatrix(h * w.k2l), phase);
      emit_single(gates, 0, w.k2r, phase);
      gates.push_back(Gate::cnot(1, 0));
      emit_single(gates, 1, ComplexMatrix(w.k1l * h * exp_iz(kPi4)), phase);
      emit_single(gates, 0, ComplexMatrix(w.k1r * exp_ix(kPi4)), phase);
      break;
    case 2:
      emit_single(gates, 1, ComplexMatrix(vdag * w.k2l), phase);
      emit_single(gates, 0, ComplexMatrix(vdag * w.k2r), phase);
      gates.push_back(Gate::cnot(1, 0));
      emit_single(gates, 1, exp_ix(w.a), phase);
      emit_single(gates, 0, exp_iz(w.b), phase);
      gates.push_back(Gate::cnot(1, 0));
      emit_single(gates, 1, ComplexMatrix(w.k1l * v), phase);
      emit_single(gates, 0, ComplexMatrix(w.k1r * v), phase);
      break;
    default:
      phase -= kPi4;
      emit_single(gates, 1, ComplexMatrix(vdag * w.k2l), phase);
      emit_single(gates, 0, ComplexMatrix(vdag * w.k2r), phase);
      gates.push_back(Gate::cnot(1, 0));
      emit_single(gates, 1, ComplexMatrix(h * exp_ix(w.a)), phase);
      emit_single(gates, 0, ComplexMatrix(v * exp_iz(w.b)), phase);
      gates.push_back(Gate::cnot(1, 0));
      emit_single(gates, 1, ComplexMatrix(h * exp_iz(kPi4)), phase);
      emit_single(gates, 0, ComplexMatrix(exp_iz(w.c) * exp_ix(kPi4)), phase);
      gates.push_back(Gate::cnot(1, 0));
      emit_single(gates, 1, w.k1l, phase);
      emit_single(gates, 0, w.k1r, phase);
      break;
  }
  SynthesisReport rep;
  rep.circuit = Circuit{2, std::move(gates)};
  rep.cnot_count = 0;
  for (const Gate& g : rep.circuit.gates) {
    if (g.kind == GateKind::CNOT) ++rep.cnot_count;
  }
  const ComplexMatrix cu = circuit_unitary(rep.circuit);
  rep.fidelity = std::abs((u.adjoint() * cu).trace()) / 4.0;
  rep.global_phase = std::remainder(phase, kTwoPi);
  return rep;
}

}  // namespace

ComplexMatrix canonical_gate(double a, double b, double c) {
  const ComplexMatrix b4 = magic_basis();
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = std::exp(kI * (a - b + c));
  d(1, 1) = std::exp(kI * (-a + b + c));
  d(2, 2) = std::exp(kI * (a + b - c));
  d(3, 3) = std::exp(kI * (-a - b - c));
  return b4 * d * b4.adjoint();
}

ZyzAngles zyz_decompose(const ComplexMatrix& v) {
  require_square(v, "single-qubit unitary");
  if (v.rows() != 2) {
    fail(ErrorKind::DimensionMismatch, "single-qubit unitary must be 2x2");
  }
  if (!all_finite(v) || unitarity_defect(v) > 1e-8) {
    fail(ErrorKind::NotUnitary, "single-qubit factor is not unitary");
  }
  const Complex det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
  const double delta = 0.5 * std::arg(det);
  const ComplexMatrix vp = v * std::exp(-kI * delta);
  // vp is in SU(2): vp = [[e^{-i(alpha+gamma)/2} cos(beta/2), ...]] with the
  // arg() of a zero entry defined as 0, which keeps every branch consistent.
  ZyzAngles z;
  z.phase = delta;
  z.beta = 2.0 * std::atan2(std::abs(vp(1, 0)), std::abs(vp(0, 0)));
  const double sum = 2.0 * std::arg(vp(1, 1));
  const double diff = 2.0 * std::arg(vp(1, 0));
  z.alpha = (sum + diff) / 2.0;
  z.gamma = (sum - diff) / 2.0;
  return z;
}

WeylDecomposition weyl_decompose(const ComplexMatrix& u, double tol) {
  require_square(u, "two-qubit unitary");
  if (u.rows() != 4) {
    fail(ErrorKind::DimensionMismatch, "two-qubit unitary must be 4x4");
  }
  if (!all_finite(u) || unitarity_defect(u) > std::max(tol, 1e-10)) {
    fail(ErrorKind::NotUnitary, "canonical form requires a unitary input");
  }
  const Complex det_u = u.determinant();
  const ComplexMatrix un = u * std::pow(det_u, -0.25);
  double phase = std::arg(det_u) / 4.0;
  const ComplexMatrix b = magic_basis();
  const ComplexMatrix up = b.adjoint() * un * b;
  const ComplexMatrix m2 = up.transpose() * up;
  const SymDiag sd = diag_complex_symmetric(m2);

  std::array<double, 4> dre{};
  for (int i = 0; i < 3; ++i) dre[i] = -std::arg(sd.d[i]) / 2.0;
  dre[3] = -dre[0] - dre[1] - dre[2];
  std::array<double, 3> cs{};
  for (int i = 0; i < 3; ++i) cs[i] = rem((dre[i] + dre[3]) / 2.0, kTwoPi);

  // Order the three coordinates by distance to the nearest multiple of pi/2;
  // the cyclic shift below lands the representative inside the chamber.
  std::array<double, 3> key{};
  for (int i = 0; i < 3; ++i) {
    const double r = rem(cs[i], kPi2);
    key[i] = std::min(r, kPi2 - r);
  }
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) { return key[l] < key[r]; });
  const std::array<int, 3> order{idx[1], idx[2], idx[0]};

  std::array<double, 3> cs_p{};
  std::array<double, 4> dre_p{};
  for (int i = 0; i < 3; ++i) {
    cs_p[i] = cs[order[i]];
    dre_p[i] = dre[order[i]];
  }
  dre_p[3] = dre[3];
  Eigen::MatrixXd pp(4, 4);
  for (int i = 0; i < 3; ++i) pp.col(i) = sd.p.col(order[i]);
  pp.col(3) = sd.p.col(3);
  if (pp.determinant() < 0.0) pp.col(3) *= -1.0;

  ComplexMatrix temp = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) temp(i, i) = std::exp(kI * dre_p[i]);
  const ComplexMatrix ppc = pp.cast<Complex>();
  ComplexMatrix k1 = up * ppc * temp;
  if ((k1 * k1.transpose() - identity(4)).cwiseAbs().maxCoeff() > 1e-9) {
    fail(ErrorKind::NotUnitary, "canonical form: orthogonality check failed");
  }
  ComplexMatrix k2 = ppc.transpose();
  k1 = b * k1 * b.adjoint();
  k2 = b * k2 * b.adjoint();
  const ProductParts p1 = decompose_product(k1);
  const ProductParts p2 = decompose_product(k2);
  phase += p1.phase + p2.phase;

  WeylDecomposition w;
  w.k1l = p1.left;
  w.k1r = p1.right;
  w.k2l = p2.left;
  w.k2r = p2.right;

  // Fold the representative into the chamber a, b in [0, pi/4], |c| <= b,
  // compensating with single-qubit Pauli rotations and phase bookkeeping.
  ComplexMatrix ipx(2, 2), ipy(2, 2), ipz(2, 2);
  ipx << 0.0, kI, kI, 0.0;
  ipy << 0.0, 1.0, -1.0, 0.0;
  ipz << kI, 0.0, 0.0, -kI;
  std::array<double, 3> c = cs_p;
  int conjs = 0;
  if (c[0] > kPi2) {
    c[0] -= 3.0 * kPi2;
    w.k1l = w.k1l * ipy;
    w.k1r = w.k1r * ipy;
    phase += kPi2;
  }
  if (c[1] > kPi2) {
    c[1] -= 3.0 * kPi2;
    w.k1l = w.k1l * ipx;
    w.k1r = w.k1r * ipx;
    phase += kPi2;
  }
  if (c[0] > kPi4) {
    c[0] = kPi2 - c[0];
    w.k1l = w.k1l * ipy;
    w.k2r = ipy * w.k2r;
    ++conjs;
    phase -= kPi2;
  }
  if (c[1] > kPi4) {
    c[1] = kPi2 - c[1];
    w.k1l = w.k1l * ipx;
    w.k2r = ipx * w.k2r;
    ++conjs;
    phase += kPi2;
    if (conjs == 1) phase -= kPi;
  }
  if (c[2] > kPi2) {
    c[2] -= 3.0 * kPi2;
    w.k1l = w.k1l * ipz;
    w.k1r = w.k1r * ipz;
    phase += kPi2;
    if (conjs == 1) phase -= kPi;
  }
  if (conjs == 1) {
    c[2] = kPi2 - c[2];
    w.k1l = w.k1l * ipz;
    w.k2r = ipz * w.k2r;
    phase += kPi2;
  }
  if (c[2] > kPi4) {
    c[2] -= kPi2;
    w.k1l = w.k1l * ipz;
    w.k1r = w.k1r * ipz;
    phase -= kPi2;
  }
  w.a = c[1];
  w.b = c[0];
  w.c = c[2];
  w.phase = phase;

  const ComplexMatrix recon = std::exp(kI * phase) * kron(w.k1l, w.k1r) *
                              canonical_gate(w.a, w.b, w.c) * kron(w.k2l, w.k2r);
  w.reconstruction_error = (recon - u).cwiseAbs().maxCoeff();
  return w;
}

SynthesisReport synthesize_2q(const ComplexMatrix& u) {
  require_square(u, "two-qubit unitary");
  if (u.rows() != 4) {
    fail(ErrorKind::DimensionMismatch, "two-qubit unitary must be 4x4");
  }
  if (!all_finite(u) || unitarity_defect(u) > 1e-10) {
    fail(ErrorKind::NotUnitary, "synthesis requires a unitary within 1e-10");
  }
  const WeylDecomposition w = weyl_decompose(u);
  const double ctol = 1e-9;
  int cnots = 3;
  if (std::abs(w.a) <= ctol && std::abs(w.b) <= ctol && std::abs(w.c) <= ctol) {
    cnots = 0;
  } else if (std::abs(w.a - kPi4) <= ctol && std::abs(w.b) <= ctol &&
             std::abs(w.c) <= ctol) {
    cnots = 1;
  } else if (std::abs(w.c) <= ctol) {
    cnots = 2;
  }
  SynthesisReport rep = emit_template(u, w, cnots);
  if (rep.fidelity < 1.0 - 1e-9 && cnots != 3) {
    rep = emit_template(u, w, 3);
  }
  if (rep.fidelity < 1.0 - 1e-9) {
    fail(ErrorKind::NotUnitary, "synthesis missed the fidelity target");
  }
  return rep;
}

Circuit prep_and_apply(const DilatedUnitary& u, const ComplexVector& v) {
  if (u.system_dim != 2) {
    fail(ErrorKind::TooWide, "circuit mapping covers single-qubit channels only");
  }
  if (v.size() != 4) {
    fail(ErrorKind::DimensionMismatch, "padded vector must have dimension 4");
  }
  if (!all_finite(v)) {
    fail(ErrorKind::NonUnitGate, "state preparation requires a finite unit vector");
  }
  if (std::abs(v.norm() - 1.0) > 1e-10) {
    fail(ErrorKind::NonUnitGate, "state preparation requires a unit vector");
  }
  if (std::abs(v(2)) > 1e-12 || std::abs(v(3)) > 1e-12) {
    fail(ErrorKind::NotPadded, "vector has support outside the padded subspace");
  }
  // Padded vectors live in the q1 = 0 subspace, so preparation from |00> is a
  // single-qubit rotation on q0.
  ComplexMatrix prep(2, 2);
  prep << v(0), -std::conj(v(1)), v(1), std::conj(v(0));
  std::vector<Gate> gates;
  double phase = 0.0;
  emit_single(gates, 0, prep, phase);
  SynthesisReport rep = synthesize_2q(u.matrix);
  for (Gate& g : rep.circuit.gates) gates.push_back(std::move(g));
  return Circuit{2, std::move(gates)};
}

}  // namespace eltqc
