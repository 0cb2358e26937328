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

// The eight-vertex braid generator family and its Yang-Baxterized, unitary
// descendants.
//
//   b_s(q)       = [[1,0,0,q],[0,1,s,0],[0,-s,1,0],[-1/q,0,0,1]],  s = +-1
//   b_s(phi)     = b_s(e^{-i phi}) / sqrt(2)                (unitary)
//   R_s(q, x)    = b_s(q) + 2x b_s(q)^-1                    (entries 1+x, 1-x)
//   R_s(theta)   = cos(theta) b_s(phi) + sin(theta) b_s(phi)^-1
//
// with x = tan(theta) and rho(x) = 2(1 + x^2) the unitarity normaliser.

#include <array>
#include <cmath>
#include <numbers>

#include "ybgate/errors.hpp"
#include "ybgate/linalg.hpp"
#include "ybgate/yangbaxter.hpp"

namespace ybgate {

/// Branch of the w3 = -w4 solution: the (1,2) entry is +1 or -1.
enum class Sign { kPlus, kMinus };

inline double sign_value(Sign s) { return s == Sign::kPlus ? 1.0 : -1.0; }
inline char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

/// Boltzmann weights w1..w8 placed as
///   [[w1,0,0,w7],[0,w5,w3,0],[0,w4,w6,0],[w8,0,0,w2]].
struct EightVertexWeights {
  Complex w1, w2, w3, w4, w5, w6, w7, w8;

  Mat4 to_matrix() const {
    return Mat4{w1, 0.0, 0.0, w7,  //
                0.0, w5, w3, 0.0,  //
                0.0, w4, w6, 0.0,  //
                w8, 0.0, 0.0, w2};
  }

  static EightVertexWeights from_matrix(const Mat4& m) {
    return {m(0, 0), m(3, 3), m(1, 2), m(2, 1),
            m(1, 1), m(2, 2), m(0, 3), m(3, 0)};
  }
};

/// Residuals of the reduced-family constraints, in order:
/// |w1-w2|, |w1-w5|, |w1-w6|, |w1^2-w3^2|, |w1^2-w4^2|, |w3^2+w7 w8|.
inline std::array<double, 6> check_constraints(const EightVertexWeights& w) {
  return {std::abs(w.w1 - w.w2),
          std::abs(w.w1 - w.w5),
          std::abs(w.w1 - w.w6),
          std::abs(w.w1 * w.w1 - w.w3 * w.w3),
          std::abs(w.w1 * w.w1 - w.w4 * w.w4),
          std::abs(w.w3 * w.w3 + w.w7 * w.w8)};
}

/// Unnormalised generator with w1 = 1. Throws ZeroDeformation for q = 0.
inline Mat4 build_b(Sign sign, Complex q) {
  if (q == Complex{}) throw ZeroDeformation("deformation parameter q is zero");
  const double s = sign_value(sign);
  return Mat4{1.0, 0.0, 0.0, q,   //
              0.0, 1.0, s, 0.0,   //
              0.0, -s, 1.0, 0.0,  //
              -1.0 / q, 0.0, 0.0, 1.0};
}

inline Complex deformation_from_phi(double phi) {
  return std::polar(1.0, -phi);
}

/// Unitary generator b_s(phi) = b_s(e^{-i phi}) / sqrt(2).
inline Mat4 build_b_phi(Sign sign, double phi) {
  return build_b(sign, deformation_from_phi(phi)) *
         Complex{kInvSqrt2, 0.0};
}

/// Yang-Baxterization of build_b(sign, q) with eigenvalues 1-i, 1+i.
inline Mat4 build_R_x(Sign sign, Complex q, double x) {
  return yang_baxterize(build_b(sign, q), eight_vertex_eigenvalues(), x);
}

/// |1+x|^2 + |1-x|^2 for real x.
inline double rho(double x) { return (1.0 + x) * (1.0 + x) + (1.0 - x) * (1.0 - x); }

/// build_R_x(sign, e^{-i phi}, x) / sqrt(rho(x)); unitary for real x.
inline Mat4 build_R_x_normalized(Sign sign, double phi, double x) {
  return build_R_x(sign, deformation_from_phi(phi), x) /
         Complex{std::sqrt(rho(x)), 0.0};
}

inline Mat4 build_R_theta(Sign sign, double phi, double theta) {
  const Mat4 b = build_b_phi(sign, phi);
  return std::cos(theta) * b + std::sin(theta) * inverse(b);
}

/// Principal branch: theta = arctan(x) in (-pi/2, pi/2).
inline double theta_from_x(double x) { return std::atan(x); }

/// Sign and deformation angle, with the spectral variable stored as theta.
struct GateParams {
  Sign sign = Sign::kMinus;
  double phi = 0.0;
  double theta = 0.0;

  static GateParams from_x(Sign sign, double phi, double x) {
    return {sign, phi, theta_from_x(x)};
  }
  Complex q() const { return deformation_from_phi(phi); }
  double x() const { return std::tan(theta); }
};

}  // namespace ybgate
