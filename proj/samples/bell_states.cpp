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

// Prints the four states the unitary braid generator makes from the
// computational basis, with their concurrence.

#include <cstdio>
#include <string>

#include "ybgate/ybgate.hpp"

int main() {
  using namespace ybgate;
  const char* labels[] = {"|00>", "|01>", "|10>", "|11>"};
  for (Sign sign : {Sign::kPlus, Sign::kMinus}) {
    std::printf("b_%c(phi = 0)\n", sign_char(sign));
    for (int k = 0; k < 4; ++k) {
      const PureState2Q psi = bell_from_b(sign, 0.0, k);
      std::printf("  %s ->", labels[k]);
      for (int j = 0; j < 4; ++j) {
        std::printf(" %+.4f%+.4fi", psi[j].real(), psi[j].imag());
      }
      std::printf("   concurrence %.3f\n", concurrence(psi));
    }
  }
  const PhaseComparison cmp = compare_up_to_phase(cnot_via_theorem1(), cnot(), 1e-12);
  std::printf("M R N vs CNOT: %s (residual %.2e)\n",
              std::string(verdict_name(cmp.verdict)).c_str(), cmp.residual);
  return 0;
}
