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

// Residual checks for the braid relation and the Yang-Baxter equation with
// spectral parameter, and the two-eigenvalue Yang-Baxterization
//
//     R(x) = b + x * lambda1 * lambda2 * b^-1.
//
// All checks run on the three-strand lift C^2 (x) C^2 (x) C^2, where a
// 4x4 operator acts as R (x) I on strands (1,2) and as I (x) R on (2,3).

#include <concepts>
#include <utility>

#include "ybgate/errors.hpp"
#include "ybgate/linalg.hpp"

namespace ybgate {

/// The two distinct eigenvalues of a braid generator with a quadratic
/// minimal polynomial.
struct EigenPair {
  Complex first;
  Complex second;

  EigenPair(Complex l1, Complex l2) : first(l1), second(l2) {
    if (l1 == l2) throw InvalidArgument("EigenPair: eigenvalues must differ");
  }
};

/// Eigenvalues 1-i and 1+i of the unnormalised eight-vertex generator.
inline EigenPair eight_vertex_eigenvalues() { return {{1.0, -1.0}, {1.0, 1.0}}; }

inline Mat8 lift_first(const Mat4& r) { return kron(r, Mat2::identity()); }
inline Mat8 lift_second(const Mat4& r) { return kron(Mat2::identity(), r); }

/// residual(b1 b2 b1, b2 b1 b2) on the 8x8 lift.
inline double braid_residual(const Mat4& b) {
  const Mat8 b1 = lift_first(b);
  const Mat8 b2 = lift_second(b);
  return residual(b1 * b2 * b1, b2 * b1 * b2);
}

/// Which argument the leading right-hand factor carries in
///   R1(x) R2(xy) R1(y) = R2(?) R1(xy) R2(?').
/// kOuterY is R2(y) R1(xy) R2(x), the form the eight-vertex family obeys;
/// kOuterX swaps the two outer arguments and is kept for comparison.
enum class QybeConvention { kOuterY, kOuterX };

template <class Family>
concept SpectralFamily = std::invocable<Family&, double> &&
    std::convertible_to<std::invoke_result_t<Family&, double>, Mat4>;

/// Residual of the spectral-parameter Yang-Baxter equation at (x, y).
template <SpectralFamily Family>
double qybe_residual(Family&& family, double x, double y,
                     QybeConvention convention = QybeConvention::kOuterY) {
  const Mat4 rx = family(x);
  const Mat4 ry = family(y);
  const Mat4 rxy = family(x * y);
  const Mat8 lhs = lift_first(rx) * lift_second(rxy) * lift_first(ry);
  const Mat8 rhs =
      convention == QybeConvention::kOuterY
          ? lift_second(ry) * lift_first(rxy) * lift_second(rx)
          : lift_second(rx) * lift_first(rxy) * lift_second(ry);
  return residual(lhs, rhs);
}

/// b + x * lambda1 * lambda2 * b^-1. Propagates SingularMatrix.
inline Mat4 yang_baxterize(const Mat4& b, const EigenPair& eig, double x) {
  return b + (x * eig.first * eig.second) * inverse(b);
}

/// residual((b - l1 I)(b - l2 I), 0): zero iff the minimal polynomial of b
/// divides (t - l1)(t - l2).
template <std::size_t N>
double verify_two_eigenvalues(const Matrix<N>& b, const EigenPair& eig) {
  const Matrix<N> id = Matrix<N>::identity();
  return max_abs((b - eig.first * id) * (b - eig.second * id));
}

}  // namespace ybgate
