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

#include <cmath>
#include <span>
#include <vector>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/state.hpp"

namespace djc {

/// e^{-iHt} through a cached eigendecomposition of H. Immutable once built.
class Propagator {
 public:
  explicit Propagator(const ModelParams& params)
      : params_(params), layout_(build_layout(params.n_max)) {
    params_.validate();
    hamiltonian_ = build_hamiltonian(params_, layout_);
    eig_ = hermitian_eig(hamiltonian_);
  }

  const ModelParams& params() const noexcept { return params_; }
  const HilbertLayout& layout() const noexcept { return layout_; }
  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  const EigenSystem& eigensystem() const noexcept { return eig_; }

  /// Dense U(t) = V diag(e^{-i lambda t}) V^H.
  ComplexMatrix unitary(double t) const {
    return spectral_map(eig_, [t](double e) { return std::exp(cplx{0.0, -e * t}); });
  }

  /// U(t) psi as two matrix-vector products in the eigenbasis.
  ComplexVector apply(std::span<const cplx> psi, double t) const {
    const std::size_t n = eig_.values.size();
    if (psi.size() != n) throw LayoutMismatch("Propagator: state size mismatch");
    const ComplexMatrix& v = eig_.vectors;
    ComplexVector coeff(n);
    for (std::size_t k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += std::conj(v(i, k)) * psi[i];
      coeff[k] = acc * std::exp(cplx{0.0, -eig_.values[k] * t});
    }
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * coeff[k];
      out[i] = acc;
    }
    return out;
  }

 private:
  ModelParams params_;
  HilbertLayout layout_;
  ComplexMatrix hamiltonian_;
  EigenSystem eig_;
};

inline StateVector evolve(const Propagator& prop, const StateVector& psi0, double t) {
  if (psi0.layout != prop.layout()) throw LayoutMismatch("evolve: state layout differs from propagator");
  return {prop.apply(psi0.amplitudes, t), psi0.layout};
}

/// Reduced state on `keep` (strictly increasing subsystem indices) of a pure state,
/// computed directly from amplitudes.
inline DensityMatrix reduced_density(const StateVector& psi, std::span<const std::size_t> keep) {
  const HilbertLayout& layout = psi.layout;
  HilbertLayout kept = layout.restrict_to(keep);
  if (psi.amplitudes.size() != layout.total_dim())
    throw LayoutMismatch("reduced_density: amplitude count does not match layout");

  const std::size_t n = layout.total_dim();
  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < layout.subsystem_count(); ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);
  std::size_t env_dim = 1;
  for (auto s : traced) env_dim *= layout.dim(s);

  // Reshape to (kept, env) then rho = M M^H.
  const std::size_t sys_dim = kept.total_dim();
  std::vector<cplx> m(sys_dim * env_dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (psi.amplitudes[i] == cplx{}) continue;
    const auto digits = layout.split(i);
    std::size_t ki = 0, ti = 0;
    for (auto s : keep) ki = ki * layout.dim(s) + digits[s];
    for (auto s : traced) ti = ti * layout.dim(s) + digits[s];
    m[ki * env_dim + ti] = psi.amplitudes[i];
  }
  ComplexMatrix rho(sys_dim);
  for (std::size_t r = 0; r < sys_dim; ++r)
    for (std::size_t c = r; c < sys_dim; ++c) {
      cplx acc = 0.0;
      for (std::size_t e = 0; e < env_dim; ++e) acc += m[r * env_dim + e] * std::conj(m[c * env_dim + e]);
      rho(r, c) = acc;
      rho(c, r) = std::conj(acc);
    }
  return {std::move(rho), std::move(kept)};
}

inline DensityMatrix reduced_density(const StateVector& psi, std::initializer_list<std::size_t> keep) {
  return reduced_density(psi, std::span<const std::size_t>(keep.begin(), keep.size()));
}

struct ZenoResult {
  StateVector state;           // normalized conditional state
  double success_probability;  // raw_norm^2
  double raw_norm;
  ComplexVector unnormalized;  // (P U(t/N))^N psi0
};

/// N rounds of [evolve by t/N, project]. Throws ZeroNorm if the projections
/// annihilate the state.
inline ZenoResult zeno_evolve(const Propagator& prop, const ComplexMatrix& projector,
                              const StateVector& psi0, double t, int steps) {
  if (steps < 1) throw InvalidParams("zeno_evolve: N must be at least 1");
  if (psi0.layout != prop.layout()) throw LayoutMismatch("zeno_evolve: state layout differs from propagator");
  if (projector.dim() != prop.layout().total_dim())
    throw LayoutMismatch("zeno_evolve: projector dim mismatch");
  assert(projector.is_hermitian(1e-12) && max_abs_diff(projector * projector, projector) < 1e-12);

  const ComplexMatrix step = projector * prop.unitary(t / steps);
  ComplexVector psi = psi0.amplitudes;
  for (int k = 0; k < steps; ++k) psi = step * psi;

  const double raw = djc::norm(psi);
  if (raw < 1e-14) throw ZeroNorm("zeno_evolve: projected state has vanishing norm");
  ZenoResult out{{psi, psi0.layout}, raw * raw, raw, psi};
  for (auto& z : out.state.amplitudes) z /= raw;
  return out;
}

/// exp(M) by scaling and squaring with a truncated Taylor series. Used as the
/// per-call reference strategy in the propagator benchmark.
inline ComplexMatrix expm_scaling_squaring(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  double norm1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(m(i, j));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const ComplexMatrix scaled = m * cplx{std::ldexp(1.0, -squarings)};

  constexpr int kOrder = 12;
  ComplexMatrix term = ComplexMatrix::identity(n);
  ComplexMatrix sum = term;
  for (int k = 1; k <= kOrder; ++k) {
    term = term * scaled;
    term *= cplx{1.0 / k};
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace djc
