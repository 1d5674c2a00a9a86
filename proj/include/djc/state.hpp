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

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "djc/linalg.hpp"

namespace djc {

/// Pure state of a composite system.
struct StateVector {
  ComplexVector amplitudes;
  HilbertLayout layout;

  double norm() const noexcept { return djc::norm(amplitudes); }
  cplx operator[](std::size_t i) const { return amplitudes.at(i); }
};

/// Density matrix over the subsystems named by `layout`.
struct DensityMatrix {
  ComplexMatrix matrix;
  HilbertLayout layout;

  std::size_t dim() const noexcept { return matrix.dim(); }
  cplx operator()(std::size_t r, std::size_t c) const { return matrix(r, c); }
};

inline DensityMatrix pure_density(const StateVector& psi) {
  return {ComplexMatrix::outer(psi.amplitudes, psi.amplitudes), psi.layout};
}

/// Copy of `amps` multiplied by the phase that makes its largest-modulus
/// entry real and positive. Ties resolve to the lowest index.
inline ComplexVector fix_global_phase(std::span<const cplx> amps) {
  ComplexVector out(amps.begin(), amps.end());
  if (out.empty()) return out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (std::abs(out[i]) > std::abs(out[best]) + 1e-12) best = i;
  const double mag = std::abs(out[best]);
  if (mag == 0.0) return out;
  const cplx phase = std::conj(out[best]) / mag;
  for (auto& z : out) z *= phase;
  return out;
}

/// Entrywise distance between two states after removing the global phase.
inline double phase_invariant_distance(std::span<const cplx> a, std::span<const cplx> b) {
  return max_abs_diff(fix_global_phase(a), fix_global_phase(b));
}

}  // namespace djc
