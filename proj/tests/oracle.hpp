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

// Test-only reference arithmetic on nested vectors. Nothing here touches
// ybgate::Matrix operations beyond reading and writing entries, so the
// library's products, Kronecker products and exponentials are checked
// against independent code.

#include <complex>
#include <cstddef>
#include <vector>

#include "ybgate/linalg.hpp"

namespace oracle {

using C = std::complex<double>;
using Dense = std::vector<std::vector<C>>;

inline Dense zeros(std::size_t n) { return Dense(n, std::vector<C>(n)); }

inline Dense eye(std::size_t n) {
  Dense d = zeros(n);
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1.0;
  return d;
}

template <std::size_t N>
Dense from(const ybgate::Matrix<N>& m) {
  Dense d = zeros(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) d[i][j] = m(i, j);
  return d;
}

template <std::size_t N>
ybgate::Matrix<N> to(const Dense& d) {
  ybgate::Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = d[i][j];
  return m;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense add(const Dense& a, const Dense& b, C scale = 1.0) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += scale * b[i][j];
  return c;
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t m = a.size(), n = b.size();
  Dense c = zeros(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) c[i * n + k][j * n + l] = a[i][j] * b[k][l];
  return c;
}

inline double max_diff(const Dense& a, const Dense& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r = std::max(r, std::abs(a[i][j] - b[i][j]));
  return r;
}

/// Plain Taylor series without scaling; fine for norms up to a few units
/// given enough terms.
inline Dense series_exp(const Dense& a, int terms = 80) {
  Dense sum = eye(a.size());
  Dense term = eye(a.size());
  for (int k = 1; k < terms; ++k) {
    term = mul(term, a);
    for (auto& row : term)
      for (auto& e : row) e /= static_cast<double>(k);
    sum = add(sum, term);
  }
  return sum;
}

/// Braid residual computed by explicit 8x8 products.
inline double braid_residual(const Dense& b) {
  const Dense b1 = kron(b, eye(2));
  const Dense b2 = kron(eye(2), b);
  return max_diff(mul(mul(b1, b2), b1), mul(mul(b2, b1), b2));
}

/// Both sides of R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x).
inline double qybe_residual(const Dense& rx, const Dense& ry, const Dense& rxy) {
  const Dense lhs = mul(mul(kron(rx, eye(2)), kron(eye(2), rxy)), kron(ry, eye(2)));
  const Dense rhs = mul(mul(kron(eye(2), ry), kron(rxy, eye(2))), kron(eye(2), rx));
  return max_diff(lhs, rhs);
}

}  // namespace oracle
