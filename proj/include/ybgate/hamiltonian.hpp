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

// Hamiltonians generating the unitary eight-vertex families.
//
// With W = b_s(phi)^2 (W^2 = -I, W^dagger = -W) the theta-family is
// R(theta) = exp((pi/4 - theta) W), so every generator below is a multiple
// of H = -(i/2) W = (1/2) sigma_n1 (x) sigma_n2 (or n2 (x) n1 for s = -1).

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "ybgate/eightvertex.hpp"
#include "ybgate/errors.hpp"
#include "ybgate/linalg.hpp"
#include "ybgate/state.hpp"

namespace ybgate {

inline constexpr double kDefaultStep = 1e-5;

/// Constant Hamiltonian -(i/2) b_s(phi)^2. Hermitian, traceless, H^2 = I/4.
inline Mat4 hamiltonian_const(Sign sign, double phi) {
  const Mat4 b = build_b_phi(sign, phi);
  return Complex{0.0, -0.5} * (b * b);
}

/// Generator of the normalised x-family at spectral value x:
/// i dR/dx R^dagger = -i / (2 (1 + x^2)) * build_b(sign, q)^2.
/// Equals hamiltonian_const at x = 1 and twice it at x = 0.
inline Mat4 hamiltonian_x(Sign sign, double phi, double x) {
  const Mat4 b = build_b(sign, deformation_from_phi(phi));
  return Complex{0.0, -0.5 / (1.0 + x * x)} * (b * b);
}

/// Central-difference generator i (F(t+h) - F(t-h)) / (2h) F(t)^dagger of a
/// unitary family. Requires 1e-8 < h < 1e-3.
template <SpectralFamily Family>
Mat4 generator_fd(Family&& family, double t, double h = kDefaultStep) {
  if (!(h > 1e-8 && h < 1e-3)) {
    throw InvalidArgument("generator_fd: step must lie in (1e-8, 1e-3)");
  }
  const Mat4 derivative = (family(t + h) - family(t - h)) / Complex{2.0 * h, 0.0};
  return kI * derivative * dagger(Mat4(family(t)));
}

/// Unit vector (cos a, sin a) in the xy-plane of the Bloch sphere.
struct PauliAxis2D {
  double angle = 0.0;
};

/// n1 = ((pi + phi) / 2) and n2 = (phi / 2) of the axis form.
inline PauliAxis2D axis_n1(double phi) { return {0.5 * (std::numbers::pi + phi)}; }
inline PauliAxis2D axis_n2(double phi) { return {0.5 * phi}; }

/// sigma . n = sigma_+ e^{-ia} + sigma_- e^{ia}.
inline Mat2 sigma_axis(PauliAxis2D axis) {
  return std::polar(1.0, -axis.angle) * pauli::plus() +
         std::polar(1.0, axis.angle) * pauli::minus();
}

enum class Pauli : std::size_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::kI, Pauli::kX, Pauli::kY,
                                              Pauli::kZ};

inline Mat2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::kX: return pauli::x();
    case Pauli::kY: return pauli::y();
    case Pauli::kZ: return pauli::z();
    case Pauli::kI: break;
  }
  return pauli::identity();
}

/// Coefficients c_ab of m = sum_ab c_ab sigma_a (x) sigma_b.
class PauliDecomposition {
 public:
  Complex& operator()(Pauli a, Pauli b) { return coeffs_[index(a, b)]; }
  const Complex& operator()(Pauli a, Pauli b) const { return coeffs_[index(a, b)]; }

  const std::array<Complex, 16>& coefficients() const { return coeffs_; }

  Mat4 reconstruct() const {
    Mat4 m;
    for (Pauli a : kPaulis) {
      for (Pauli b : kPaulis) {
        m += (*this)(a, b) * kron(pauli_matrix(a), pauli_matrix(b));
      }
    }
    return m;
  }

 private:
  static std::size_t index(Pauli a, Pauli b) {
    return 4 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
  }
  std::array<Complex, 16> coeffs_{};
};

/// c_ab = tr((sigma_a (x) sigma_b) m) / 4.
inline PauliDecomposition pauli_decompose(const Mat4& m) {
  PauliDecomposition d;
  for (Pauli a : kPaulis) {
    for (Pauli b : kPaulis) {
      d(a, b) = trace(kron(pauli_matrix(a), pauli_matrix(b)) * m) / 4.0;
    }
  }
  return d;
}

/// sigma_n1 (x) sigma_n2 for s = +1, sigma_n2 (x) sigma_n1 for s = -1.
inline Mat4 axis_coupling(Sign sign, double phi) {
  const Mat2 s1 = sigma_axis(axis_n1(phi));
  const Mat2 s2 = sigma_axis(axis_n2(phi));
  return sign == Sign::kPlus ? kron(s1, s2) : kron(s2, s1);
}

/// U(theta) = exp(-i theta/2 * axis_coupling)
///          = cos(theta/2) I - i sin(theta/2) axis_coupling.
inline Mat4 evolution_U(Sign sign, double phi, double theta) {
  return std::cos(0.5 * theta) * Mat4::identity() -
         Complex{0.0, std::sin(0.5 * theta)} * axis_coupling(sign, phi);
}

/// cos(pi/4 - theta) I + 2i sin(pi/4 - theta) H = exp(i (pi/2 - 2 theta) H).
inline Mat4 R_from_H(Sign sign, double phi, double theta) {
  const double angle = std::numbers::pi / 4.0 - theta;
  return std::cos(angle) * Mat4::identity() +
         Complex{0.0, 2.0 * std::sin(angle)} * hamiltonian_const(sign, phi);
}

/// Norm of i dpsi/dx - H(x) psi(x) by central differences, where
/// psi(x) = build_R_x_normalized(sign, phi, x) psi0.
inline double schrodinger_residual(Sign sign, double phi, const PureState2Q& psi0,
                                   double x, double h = kDefaultStep) {
  const Amplitudes& v = psi0.amplitudes();
  const Amplitudes ahead = build_R_x_normalized(sign, phi, x + h) * v;
  const Amplitudes behind = build_R_x_normalized(sign, phi, x - h) * v;
  const Amplitudes here = build_R_x_normalized(sign, phi, x) * v;
  const Amplitudes driven = hamiltonian_x(sign, phi, x) * here;
  Amplitudes diff{};
  for (std::size_t k = 0; k < 4; ++k) {
    diff[k] = kI * (ahead[k] - behind[k]) / (2.0 * h) - driven[k];
  }
  return norm(diff);
}

}  // namespace ybgate
