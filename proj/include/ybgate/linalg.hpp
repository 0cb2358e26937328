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

// Small dense complex matrices (2x2, 4x4, 8x8) and the handful of
// operations the gate constructions need. Every comparison in the library
// is a max-entry absolute residual.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>

#include "ybgate/errors.hpp"

namespace ybgate {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// 1/sqrt(2); halving is exact so this is the correctly rounded value.
inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

template <std::size_t N>
concept SupportedDim = (N == 2 || N == 4 || N == 8);

template <std::size_t N>
  requires SupportedDim<N>
class Matrix {
 public:
  static constexpr std::size_t kDim = N;
  static constexpr std::size_t kSize = N * N;

  /// Zero matrix.
  constexpr Matrix() = default;

  /// Row-major entries; the list must hold exactly N*N values.
  Matrix(std::initializer_list<Complex> row_major) {
    if (row_major.size() != kSize) {
      throw DimMismatch("expected " + std::to_string(kSize) +
                        " entries, got " + std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), entries_.begin());
  }

  explicit Matrix(std::span<const Complex, kSize> row_major) {
    std::copy(row_major.begin(), row_major.end(), entries_.begin());
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * N + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * N + col];
  }

  std::span<const Complex, kSize> entries() const { return entries_; }
  std::span<Complex, kSize> entries() { return entries_; }

  Matrix& operator+=(const Matrix& rhs) {
    for (std::size_t k = 0; k < kSize; ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    for (std::size_t k = 0; k < kSize; ++k) entries_[k] -= rhs.entries_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }
  Matrix& operator/=(Complex s) {
    for (auto& e : entries_) e /= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator/(Matrix a, Complex s) { return a /= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend std::array<Complex, N> operator*(const Matrix& a,
                                          const std::array<Complex, N>& v) {
    std::array<Complex, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
    }
    return out;
  }

  /// Exact entrywise equality.
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Complex, kSize> entries_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Mat8 = Matrix<8>;

/// Kronecker product: entry (i*n+k, j*n+l) = a(i,j) * b(k,l).
template <std::size_t M, std::size_t P>
  requires SupportedDim<M * P>
Matrix<M * P> kron(const Matrix<M>& a, const Matrix<P>& b) {
  Matrix<M * P> out;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      for (std::size_t k = 0; k < P; ++k) {
        for (std::size_t l = 0; l < P; ++l) {
          out(i * P + k, j * P + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

template <std::size_t N>
Matrix<N> dagger(const Matrix<N>& a) {
  Matrix<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

template <std::size_t N>
Complex trace(const Matrix<N>& a) {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

/// Max over entries of |a - b|.
template <std::size_t N>
double residual(const Matrix<N>& a, const Matrix<N>& b) {
  double r = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) {
    r = std::max(r, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return r;
}

/// Max-entry size of `a`, i.e. residual(a, 0).
template <std::size_t N>
double max_abs(const Matrix<N>& a) {
  return residual(a, Matrix<N>{});
}

/// residual(a a^dagger, I).
template <std::size_t N>
double unitarity_residual(const Matrix<N>& a) {
  return residual(a * dagger(a), Matrix<N>::identity());
}

template <std::size_t N>
double hermiticity_residual(const Matrix<N>& a) {
  return residual(a, dagger(a));
}

inline constexpr double kSingularThreshold = 1e-12;

namespace detail {

/// LU factorisation with partial pivoting, in place. Returns the determinant;
/// `perm` receives the row order.
template <std::size_t N>
Complex lu_factor(Matrix<N>& lu, std::array<std::size_t, N>& perm) {
  for (std::size_t i = 0; i < N; ++i) perm[i] = i;
  Complex det{1.0, 0.0};
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < N; ++row) {
      if (std::abs(lu(row, col)) > std::abs(lu(pivot, col))) pivot = row;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < N; ++j) std::swap(lu(col, j), lu(pivot, j));
      std::swap(perm[col], perm[pivot]);
      det = -det;
    }
    const Complex p = lu(col, col);
    det *= p;
    if (p == Complex{}) return Complex{};
    for (std::size_t row = col + 1; row < N; ++row) {
      const Complex f = lu(row, col) / p;
      lu(row, col) = f;
      for (std::size_t j = col + 1; j < N; ++j) lu(row, j) -= f * lu(col, j);
    }
  }
  return det;
}

}  // namespace detail

template <std::size_t N>
Complex determinant(const Matrix<N>& a) {
  if constexpr (N == 2) {
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  } else {
    Matrix<N> lu = a;
    std::array<std::size_t, N> perm{};
    return detail::lu_factor(lu, perm);
  }
}

/// Inverse by cofactors (2x2) or pivoted LU (4x4, 8x8).
/// Throws SingularMatrix when |det| <= 1e-12.
template <std::size_t N>
Matrix<N> inverse(const Matrix<N>& a) {
  if constexpr (N == 2) {
    const Complex det = determinant(a);
    if (!(std::abs(det) > kSingularThreshold)) {
      throw SingularMatrix("2x2 matrix is singular");
    }
    return Mat2{a(1, 1), -a(0, 1), -a(1, 0), a(0, 0)} / det;
  } else {
    Matrix<N> lu = a;
    std::array<std::size_t, N> perm{};
    const Complex det = detail::lu_factor(lu, perm);
    if (!(std::abs(det) > kSingularThreshold)) {
      throw SingularMatrix(std::to_string(N) + "x" + std::to_string(N) +
                           " matrix is singular");
    }
    Matrix<N> inv;
    for (std::size_t col = 0; col < N; ++col) {
      // Solve L U x = P e_col.
      std::array<Complex, N> x{};
      for (std::size_t i = 0; i < N; ++i) {
        Complex s = perm[i] == col ? Complex{1.0, 0.0} : Complex{};
        for (std::size_t k = 0; k < i; ++k) s -= lu(i, k) * x[k];
        x[i] = s;
      }
      for (std::size_t i = N; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t k = i + 1; k < N; ++k) s -= lu(i, k) * x[k];
        x[i] = s / lu(i, i);
      }
      for (std::size_t i = 0; i < N; ++i) inv(i, col) = x[i];
    }
    return inv;
  }
}

/// Infinity norm (max absolute row sum).
template <std::size_t N>
double norm_inf(const Matrix<N>& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < N; ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

inline constexpr int kExpmSeriesOrder = 18;
inline constexpr double kExpmScaledNorm = 0.5;

/// Matrix exponential by scaling and squaring. The argument is scaled by
/// 2^-s so its infinity norm is at most 0.5, a fixed order-18 Taylor series
/// is summed, and the result is squared s times.
template <std::size_t N>
Matrix<N> expm(const Matrix<N>& a) {
  const double norm = norm_inf(a);
  if (!std::isfinite(norm)) throw NonConvergence("expm: non-finite input");
  int squarings = 0;
  if (norm > kExpmScaledNorm) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kExpmScaledNorm)));
  }
  if (squarings > 60) throw NonConvergence("expm: input norm too large");

  const Matrix<N> scaled = a * Complex{std::ldexp(1.0, -squarings), 0.0};
  Matrix<N> term = Matrix<N>::identity();
  Matrix<N> sum = term;
  for (int k = 1; k <= kExpmSeriesOrder; ++k) {
    term = term * scaled / Complex{static_cast<double>(k), 0.0};
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;

  for (const Complex& e : sum.entries()) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw NonConvergence("expm: series produced non-finite entries");
    }
  }
  return sum;
}

namespace pauli {

inline Mat2 identity() { return Mat2::identity(); }
inline Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
inline Mat2 y() { return Mat2{0.0, -kI, kI, 0.0}; }
inline Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }
/// (sigma_x + i sigma_y) / 2, the raising operator |0><1|.
inline Mat2 plus() { return Mat2{0.0, 1.0, 0.0, 0.0}; }
/// (sigma_x - i sigma_y) / 2.
inline Mat2 minus() { return Mat2{0.0, 0.0, 1.0, 0.0}; }

}  // namespace pauli

}  // namespace ybgate
