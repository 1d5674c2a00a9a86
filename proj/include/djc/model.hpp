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

// Double Jaynes-Cummings model: atoms A, B each coupled to their own cavity
// mode a, b. Tensor order is A (x) B (x) a (x) b, atom level 0 = excited.

#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "djc/linalg.hpp"
#include "djc/state.hpp"

namespace djc {

enum Subsystem : std::size_t { kAtomA = 0, kAtomB = 1, kModeA = 2, kModeB = 3 };

enum class AtomLevel : std::size_t { Excited = 0, Ground = 1 };

enum class Scenario { Ground, Excited };

inline std::string_view to_string(Scenario s) {
  return s == Scenario::Ground ? "ground" : "excited";
}

struct ModelParams {
  double g = 1.0;
  double omega = 1.0;
  double nu = 1.0;
  int n_max = 2;

  void validate() const {
    if (!(g > 0.0) || !std::isfinite(g)) throw InvalidParams("coupling g must be positive");
    if (!(omega >= 0.0) || !(nu >= 0.0) || !std::isfinite(omega) || !std::isfinite(nu))
      throw InvalidParams("omega and nu must be non-negative");
    if (n_max < 2) throw TruncationTooSmall("n_max must be at least 2");
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct InitialCondition {
  Scenario scenario = Scenario::Ground;
  double alpha = 0.0;
};

inline HilbertLayout build_layout(int n_max) {
  if (n_max < 2) throw TruncationTooSmall("n_max must be at least 2, got " + std::to_string(n_max));
  const auto modes = static_cast<std::size_t>(n_max) + 1;
  return HilbertLayout({2, 2, modes, modes}, {"A", "B", "a", "b"});
}

inline std::size_t basis_index(const HilbertLayout& layout, AtomLevel atom_a, AtomLevel atom_b,
                               std::size_t photons_a, std::size_t photons_b) {
  return layout.join({static_cast<std::size_t>(atom_a), static_cast<std::size_t>(atom_b),
                      photons_a, photons_b});
}

namespace ops {

inline ComplexMatrix sigma_z() { return ComplexMatrix::diagonal({1.0, -1.0}); }
/// |g><e|
inline ComplexMatrix sigma_minus() { return {{0.0, 0.0}, {1.0, 0.0}}; }
/// |e><g|
inline ComplexMatrix sigma_plus() { return {{0.0, 1.0}, {0.0, 0.0}}; }
inline ComplexMatrix sigma_y() { return {{0.0, -kI}, {kI, 0.0}}; }

inline ComplexMatrix annihilation(std::size_t levels) {
  ComplexMatrix a(levels);
  for (std::size_t n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}
inline ComplexMatrix creation(std::size_t levels) { return annihilation(levels).adjoint(); }
inline ComplexMatrix number(std::size_t levels) {
  ComplexMatrix n(levels);
  for (std::size_t k = 0; k < levels; ++k) n(k, k) = static_cast<double>(k);
  return n;
}
inline ComplexMatrix atom_projector(AtomLevel level) {
  ComplexMatrix p(2);
  const auto k = static_cast<std::size_t>(level);
  p(k, k) = 1.0;
  return p;
}

/// Places `op` on `subsystem` and identities elsewhere.
inline ComplexMatrix lift(const HilbertLayout& layout, std::size_t subsystem, const ComplexMatrix& op) {
  if (op.dim() != layout.dim(subsystem)) throw DimensionMismatch("lift: operator dim mismatch");
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t s = 0; s < layout.subsystem_count(); ++s)
    out = kron(out, s == subsystem ? op : ComplexMatrix::identity(layout.dim(s)));
  return out;
}

}  // namespace ops

/// H = w/2 (sz_A + sz_B) + g (a^+ s-_A + a s+_A) + g (b^+ s-_B + b s+_B) + nu (a^+a + b^+b), hbar = 1.
/// Accepts g = 0 (decoupled limit); sweeps require g > 0 through ModelParams::validate.
inline ComplexMatrix build_hamiltonian(const ModelParams& p, const HilbertLayout& layout) {
  if (!(p.g >= 0.0) || !(p.omega >= 0.0) || !(p.nu >= 0.0) || !std::isfinite(p.g) || !std::isfinite(p.omega) ||
      !std::isfinite(p.nu))
    throw InvalidParams("build_hamiltonian: g, omega, nu must be finite and non-negative");
  if (layout.subsystem_count() != 4 || layout.dim(kAtomA) != 2 || layout.dim(kAtomB) != 2)
    throw LayoutMismatch("build_hamiltonian: layout is not A,B,a,b");
  using namespace ops;
  const std::size_t levels = layout.dim(kModeA);
  const auto lift_ = [&](std::size_t s, const ComplexMatrix& m) { return lift(layout, s, m); };

  ComplexMatrix h = 0.5 * p.omega * (lift_(kAtomA, sigma_z()) + lift_(kAtomB, sigma_z()));
  h += p.nu * (lift_(kModeA, number(levels)) + lift_(kModeB, number(layout.dim(kModeB))));
  const auto coupling = [&](std::size_t atom, std::size_t mode) {
    const std::size_t lv = layout.dim(mode);
    return lift_(mode, creation(lv)) * lift_(atom, sigma_minus()) +
           lift_(mode, annihilation(lv)) * lift_(atom, sigma_plus());
  };
  h += p.g * (coupling(kAtomA, kModeA) + coupling(kAtomB, kModeB));
  assert(h.is_hermitian(1e-14));
  return h;
}

inline StateVector build_initial_state(const InitialCondition& ic, const HilbertLayout& layout) {
  const AtomLevel atoms = ic.scenario == Scenario::Ground ? AtomLevel::Ground : AtomLevel::Excited;
  StateVector psi{ComplexVector(layout.total_dim()), layout};
  psi.amplitudes[basis_index(layout, atoms, atoms, 0, 1)] = std::cos(ic.alpha);
  psi.amplitudes[basis_index(layout, atoms, atoms, 1, 0)] = std::sin(ic.alpha);
  return psi;
}

/// Total excitation count s+s-_A + s+s-_B + a^+a + b^+b.
inline ComplexMatrix excitation_operator(const HilbertLayout& layout) {
  using namespace ops;
  const ComplexMatrix up = atom_projector(AtomLevel::Excited);
  return lift(layout, kAtomA, up) + lift(layout, kAtomB, up) +
         lift(layout, kModeA, number(layout.dim(kModeA))) +
         lift(layout, kModeB, number(layout.dim(kModeB)));
}

/// Projects atom B onto `level`; identity on A, a, b.
inline ComplexMatrix zeno_projector(const HilbertLayout& layout, AtomLevel level = AtomLevel::Ground) {
  return ops::lift(layout, kAtomB, ops::atom_projector(level));
}

/// Projector that keeps atom B in its initial level for the given scenario.
inline ComplexMatrix zeno_projector_for(Scenario scenario, const HilbertLayout& layout) {
  return zeno_projector(layout, scenario == Scenario::Ground ? AtomLevel::Ground : AtomLevel::Excited);
}

}  // namespace djc
