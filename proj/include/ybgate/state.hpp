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

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ybgate/errors.hpp"
#include "ybgate/linalg.hpp"

namespace ybgate {

using Qubit = std::array<Complex, 2>;
using Amplitudes = std::array<Complex, 4>;

inline constexpr double kStateNormTolerance = 1e-12;

inline double norm(const Amplitudes& v) {
  double s = 0.0;
  for (const Complex& a : v) s += std::norm(a);
  return std::sqrt(s);
}

/// Two-qubit pure state, amplitudes ordered |00>, |01>, |10>, |11>.
class PureState2Q {
 public:
  /// Throws InvalidArgument unless the amplitudes have unit norm.
  explicit PureState2Q(const Amplitudes& amps) : amps_(amps) {
    if (std::abs(norm(amps) - 1.0) > kStateNormTolerance) {
      throw InvalidArgument("PureState2Q: amplitudes are not unit norm");
    }
  }

  /// Rescales a non-zero vector to unit norm.
  static PureState2Q normalized(Amplitudes amps) {
    const double n = norm(amps);
    if (!(n > 0.0)) throw InvalidArgument("PureState2Q: zero vector");
    for (Complex& a : amps) a /= n;
    return PureState2Q(amps);
  }

  static PureState2Q basis(int index) {
    if (index < 0 || index > 3) throw InvalidArgument("basis index outside 0..3");
    Amplitudes amps{};
    amps[static_cast<std::size_t>(index)] = 1.0;
    return PureState2Q(amps);
  }

  /// |u> (x) |v> for unit single-qubit vectors.
  static PureState2Q product(const Qubit& u, const Qubit& v) {
    return normalized({u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]});
  }

  const Amplitudes& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

 private:
  Amplitudes amps_;
};

inline double distance(const PureState2Q& a, const PureState2Q& b) {
  Amplitudes d{};
  for (std::size_t i = 0; i < 4; ++i) d[i] = a[i] - b[i];
  return norm(d);
}

/// Uniform double in [0, 1) from the top 53 bits, so sampled values do not
/// depend on the standard library's distribution implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Single-qubit state with a Bloch vector drawn uniformly from the sphere.
inline Qubit random_qubit(std::mt19937_64& rng) {
  const double cos_polar = 2.0 * uniform01(rng) - 1.0;
  const double half_polar = 0.5 * std::acos(cos_polar);
  const double azimuth = 2.0 * std::numbers::pi * uniform01(rng);
  return {Complex{std::cos(half_polar), 0.0},
          std::polar(std::sin(half_polar), azimuth)};
}

/// Generic (typically entangled) two-qubit state.
inline PureState2Q random_state(std::mt19937_64& rng) {
  Amplitudes amps{};
  for (Complex& a : amps) {
    a = {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
  }
  return PureState2Q::normalized(amps);
}

}  // namespace ybgate
