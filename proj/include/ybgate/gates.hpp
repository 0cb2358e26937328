// Copyright 2026 The ybgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Single-qubit gates, SO(3) rotations and the two CNOT constructions from
// the unitary braid generator R = b_-(0):
//
//   * conjugation by local gates, CNOT = (alpha (x) beta) R (-gamma (x) delta);
//   * the rotation chain taking U_+(theta) to exp(-i theta/2 sigma_z (x) sigma_x)
//     and, at theta = pi/2, to CNOT after a phase-gate correction.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string_view>

#include "ybgate/eightvertex.hpp"
#include "ybgate/errors.hpp"
#include "ybgate/hamiltonian.hpp"
#include "ybgate/linalg.hpp"

namespace ybgate {

struct LocalGateSet {
  Mat2 alpha;
  Mat2 beta;
  Mat2 gamma;
  Mat2 delta;
};

inline LocalGateSet local_gates() {
  constexpr double r = kInvSqrt2;
  return {
      Mat2{r, r, r, -r},
      Mat2{-r, r, Complex{0.0, r}, Complex{0.0, r}},
      Mat2{r, Complex{0.0, r}, r, Complex{0.0, -r}},
      Mat2{1.0, 0.0, 0.0, kI},
  };
}

struct Projectors {
  Mat2 up;
  Mat2 down;
};

/// Eigenprojectors of sigma_z: diag(1, 0) and diag(0, 1).
inline Projectors projectors() {
  return {Mat2{1.0, 0.0, 0.0, 0.0}, Mat2{0.0, 0.0, 0.0, 1.0}};
}

inline Mat4 cnot() {
  return Mat4{1.0, 0.0, 0.0, 0.0,  //
              0.0, 1.0, 0.0, 0.0,  //
              0.0, 0.0, 0.0, 1.0,  //
              0.0, 0.0, 1.0, 0.0};
}

inline Mat4 swap_gate() {
  return Mat4{1.0, 0.0, 0.0, 0.0,  //
              0.0, 0.0, 1.0, 0.0,  //
              0.0, 1.0, 0.0, 0.0,  //
              0.0, 0.0, 0.0, 1.0};
}

inline Mat4 theorem1_left() {
  const LocalGateSet g = local_gates();
  return kron(g.alpha, g.beta);
}

inline Mat4 theorem1_right() {
  const LocalGateSet g = local_gates();
  return -kron(g.gamma, g.delta);
}

/// M R N with M = alpha (x) beta, N = -gamma (x) delta, R = b_-(phi = 0).
inline Mat4 cnot_via_theorem1() {
  return theorem1_left() * build_b_phi(Sign::kMinus, 0.0) * theorem1_right();
}

struct PauliAxis3D {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

inline constexpr double kAxisNormTolerance = 1e-12;

/// D_n(theta) = exp(-i theta/2 sigma.n) = cos(theta/2) I - i sin(theta/2) sigma.n.
/// Throws NonUnitAxis when |n| deviates from 1 by more than 1e-12.
inline Mat2 rotation(const PauliAxis3D& n, double theta) {
  const double length = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
  if (!(std::abs(length - 1.0) <= kAxisNormTolerance)) {
    throw NonUnitAxis("rotation axis is not a unit vector");
  }
  const Mat2 sigma_n = n.x * pauli::x() + n.y * pauli::y() + n.z * pauli::z();
  return std::cos(0.5 * theta) * Mat2::identity() -
         Complex{0.0, std::sin(0.5 * theta)} * sigma_n;
}

inline Mat2 rotation_x(double theta) { return rotation({1.0, 0.0, 0.0}, theta); }
inline Mat2 rotation_y(double theta) { return rotation({0.0, 1.0, 0.0}, theta); }
inline Mat2 rotation_z(double theta) { return rotation({0.0, 0.0, 1.0}, theta); }

struct ConjugationResiduals {
  double n1_to_z;  ///< Dx(pi/2) Dz(-phi/2) sigma_n1 Dz(phi/2) Dx(-pi/2) vs sigma_z
  double n2_to_x;  ///< Dz(-phi/2) sigma_n2 Dz(phi/2) vs sigma_x
};

inline ConjugationResiduals conjugation_identities(double phi) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const Mat2 n1 = sigma_axis(axis_n1(phi));
  const Mat2 n2 = sigma_axis(axis_n2(phi));
  const Mat2 rotated_n1 = rotation_x(half_pi) * rotation_z(-0.5 * phi) * n1 *
                          rotation_z(0.5 * phi) * rotation_x(-half_pi);
  const Mat2 rotated_n2 = rotation_z(-0.5 * phi) * n2 * rotation_z(0.5 * phi);
  return {residual(rotated_n1, pauli::z()), residual(rotated_n2, pauli::x())};
}

/// (Dx(pi/2) Dz(-phi/2) (x) Dz(-phi/2)) U_+(theta) (Dz(phi/2) Dx(-pi/2) (x) Dz(phi/2)),
/// which equals exp(-i theta/2 sigma_z (x) sigma_x) for every phi.
inline Mat4 conjugate_to_zx(double phi, double theta) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const Mat4 left = kron(Mat2(rotation_x(half_pi) * rotation_z(-0.5 * phi)),
                         rotation_z(-0.5 * phi));
  const Mat4 right = kron(Mat2(rotation_z(0.5 * phi) * rotation_x(-half_pi)),
                          rotation_z(0.5 * phi));
  return left * evolution_U(Sign::kPlus, phi, theta) * right;
}

/// The phase gate of the rotation-chain correction, P_up - i P_down.
/// Note this is the adjoint of local_gates().delta = diag(1, i); only
/// diag(1, -i) turns the chain into CNOT.
inline Mat2 phase_gate() { return Mat2{1.0, 0.0, 0.0, -kI}; }

/// (phase (x) exp(i pi/4 sigma_x)) conjugate_to_zx(phi, theta).
/// CNOT exactly when theta = pi/2 and phase = phase_gate().
inline Mat4 cnot_via_evolution(double phi, double theta = std::numbers::pi / 2.0,
                               const Mat2& phase = phase_gate()) {
  const Mat2 x_quarter = expm(Complex{0.0, std::numbers::pi / 4.0} * pauli::x());
  return kron(phase, x_quarter) * conjugate_to_zx(phi, theta);
}

/// (Dy(-pi/2) (x) Dz(-pi/2)) exp(i pi/4 sigma_x (x) sigma_y) (Dy(pi/2) (x) Dz(pi/2)).
inline Mat4 transform_R_to_zx() {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const Mat4 r = expm(Complex{0.0, std::numbers::pi / 4.0} *
                      kron(pauli::x(), pauli::y()));
  return kron(rotation_y(-half_pi), rotation_z(-half_pi)) * r *
         kron(rotation_y(half_pi), rotation_z(half_pi));
}

enum class PhaseVerdict { kEqual, kEqualUpToPhase, kDifferent };

inline std::string_view verdict_name(PhaseVerdict v) {
  switch (v) {
    case PhaseVerdict::kEqual: return "equal";
    case PhaseVerdict::kEqualUpToPhase: return "equal_up_to_phase";
    case PhaseVerdict::kDifferent: return "different";
  }
  return "different";
}

struct PhaseComparison {
  PhaseVerdict verdict = PhaseVerdict::kDifferent;
  double residual = 0.0;        ///< residual(a, b)
  double phase = 0.0;           ///< chi with a ~ e^{i chi} b
  double phase_residual = 0.0;  ///< residual(a, e^{i chi} b)
};

/// Exact equality is checked first; otherwise chi is read off the entry of
/// `b` with the largest magnitude and the phase-corrected residual decides.
template <std::size_t N>
PhaseComparison compare_up_to_phase(const Matrix<N>& a, const Matrix<N>& b,
                                    double tol) {
  PhaseComparison out;
  out.residual = residual(a, b);
  std::size_t largest = 0;
  for (std::size_t k = 1; k < N * N; ++k) {
    if (std::abs(b.entries()[k]) > std::abs(b.entries()[largest])) largest = k;
  }
  const Complex bk = b.entries()[largest];
  if (bk != Complex{}) out.phase = std::arg(a.entries()[largest] / bk);
  out.phase_residual = residual(a, std::polar(1.0, out.phase) * b);
  if (out.residual < tol) {
    out.verdict = PhaseVerdict::kEqual;
  } else if (out.phase_residual < tol) {
    out.verdict = PhaseVerdict::kEqualUpToPhase;
  }
  return out;
}

}  // namespace ybgate
