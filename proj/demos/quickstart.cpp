// Copyright 2026 The djc Authors
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

// Entanglement transfer from a photon pair to two ground-state atoms.

#include <cstdio>
#include <numbers>

#include "djc/analytic.hpp"
#include "djc/dynamics.hpp"
#include "djc/measures.hpp"

int main() {
  using namespace djc;
  const ModelParams params;  // g = omega = nu = 1, n_max = 2
  const Propagator prop(params);
  const double alpha = std::numbers::pi / 4;
  const StateVector psi0 = build_initial_state({Scenario::Ground, alpha}, prop.layout());

  std::printf("%8s %10s %10s %10s\n", "gt", "C_AB", "C_ab", "sum");
  for (int k = 0; k <= 8; ++k) {
    const double gt = std::numbers::pi * k / 8;
    const StateVector psi = evolve(prop, psi0, gt / params.g);
    const double atoms = concurrence_x(reduced_density(psi, {kAtomA, kAtomB}).matrix);
    const double photons = measure(reduced_density(psi, {kModeA, kModeB}), MeasureKind::ConcurrenceX);
    std::printf("%8.4f %10.6f %10.6f %10.6f\n", gt, atoms, photons, atoms + photons);
  }
}
