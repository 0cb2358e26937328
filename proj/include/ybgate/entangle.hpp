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
#include <optional>
#include <random>

#include "ybgate/eightvertex.hpp"
#include "ybgate/errors.hpp"
#include "ybgate/linalg.hpp"
#include "ybgate/state.hpp"

namespace ybgate {

inline constexpr double kGateUnitarityTolerance = 1e-10;
inline constexpr double kEntanglingThreshold = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr int kRandomProductSamples = 64;

/// g |psi>. Throws NonUnitaryGate if residual(g g^dagger, I) > 1e-10.
inline PureState2Q apply_gate(const Mat4& g, const PureState2Q& psi) {
  if (unitarity_residual(g) > kGateUnitarityTolerance) {
    throw NonUnitaryGate("apply_gate: gate is not unitary");
  }
  return PureState2Q::normalized(g * psi.amplitudes());
}

/// b_s(phi) applied to a computational basis state.
inline PureState2Q bell_from_b(Sign sign, double phi, int basis_index) {
  return apply_gate(build_b_phi(sign, phi), PureState2Q::basis(basis_index));
}

inline PureState2Q r_theta_action(Sign sign, double phi, double theta,
                                  int basis_index) {
  return apply_gate(build_R_theta(sign, phi, theta),
                    PureState2Q::basis(basis_index));
}

/// 2 |a00 a11 - a01 a10|; zero exactly on product states.
inline double concurrence(const PureState2Q& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

/// Outcome of the product-state search. A positive verdict is certified by
/// the witness; a negative verdict only means no sampled product state was
/// entangled above the threshold.
struct EntanglingVerdict {
  bool entangling = false;
  std::optional<PureState2Q> witness;        ///< g |u v>, most entangled output
  std::optional<PureState2Q> witness_input;  ///< the product state |u v>
  double concurrence_max = 0.0;
};

/// |0>, |1>, |+>, |->, |+i>, |-i>.
inline std::array<Qubit, 6> pauli_eigenstates() {
  constexpr double r = kInvSqrt2;
  return {{{1.0, 0.0},
           {0.0, 1.0},
           {r, r},
           {r, -r},
           {r, Complex{0.0, r}},
           {r, Complex{0.0, -r}}}};
}

/// Searches the 36 Pauli-eigenstate pairs and 64 seeded random product
/// states for one that `g` maps to an entangled state.
inline EntanglingVerdict is_entangling(const Mat4& g,
                                       double threshold = kEntanglingThreshold,
                                       std::uint64_t seed = kDefaultSeed) {
  if (unitarity_residual(g) > kGateUnitarityTolerance) {
    throw NonUnitaryGate("is_entangling: gate is not unitary");
  }
  EntanglingVerdict verdict;
  auto consider = [&](const Qubit& u, const Qubit& v) {
    const PureState2Q input = PureState2Q::product(u, v);
    const PureState2Q output = apply_gate(g, input);
    const double c = concurrence(output);
    if (!verdict.witness || c > verdict.concurrence_max) {
      verdict.concurrence_max = c;
      verdict.witness = output;
      verdict.witness_input = input;
    }
  };

  const auto eigenstates = pauli_eigenstates();
  for (const Qubit& u : eigenstates) {
    for (const Qubit& v : eigenstates) consider(u, v);
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < kRandomProductSamples; ++k) {
    const Qubit u = random_qubit(rng);
    const Qubit v = random_qubit(rng);
    consider(u, v);
  }

  verdict.entangling = verdict.concurrence_max > threshold;
  if (!verdict.entangling) {
    verdict.witness.reset();
    verdict.witness_input.reset();
  }
  return verdict;
}

}  // namespace ybgate
