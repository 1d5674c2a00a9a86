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
#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/state.hpp"

namespace djc {

enum class MeasureKind { ConcurrenceX, ConcurrenceGeneral, NegativityPaper, NegativityStandard };

enum class NegativityConvention {
  Paper,     // 2 max{0, -lambda_min}
  Standard,  // 2 sum |negative eigenvalues|
};

inline constexpr std::array kAllMeasures{MeasureKind::ConcurrenceX, MeasureKind::ConcurrenceGeneral,
                                         MeasureKind::NegativityPaper, MeasureKind::NegativityStandard};

inline std::string_view to_string(MeasureKind m) {
  switch (m) {
    case MeasureKind::ConcurrenceX: return "concurrence_x";
    case MeasureKind::ConcurrenceGeneral: return "concurrence_general";
    case MeasureKind::NegativityPaper: return "negativity_paper";
    case MeasureKind::NegativityStandard: return "negativity_standard";
  }
  return "?";
}

inline std::optional<MeasureKind> parse_measure(std::string_view s) {
  for (auto m : kAllMeasures)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

inline bool is_concurrence(MeasureKind m) {
  return m == MeasureKind::ConcurrenceX || m == MeasureKind::ConcurrenceGeneral;
}

struct MeasureValue {
  double value;
  MeasureKind measure;
  std::string_view pair;
};

inline constexpr double kDensityTraceTol = 1e-8;
inline constexpr double kDensityEigTol = 1e-8;

/// Throws NotDensityMatrix unless `rho` is Hermitian, unit-trace and PSD
/// within the validation tolerances.
inline void validate_density(const ComplexMatrix& rho) {
  if (!rho.all_finite()) throw NotDensityMatrix("density matrix has non-finite entries");
  if (!rho.is_hermitian(kDensityEigTol)) throw NotDensityMatrix("density matrix is not Hermitian");
  const cplx tr = rho.trace();
  if (std::abs(tr - 1.0) > kDensityTraceTol)
    throw NotDensityMatrix("density matrix trace " + std::to_string(tr.real()) + " is not 1");
  const auto vals = hermitian_eigenvalues(rho, kDensityEigTol);
  if (vals.front() < -kDensityEigTol)
    throw NotDensityMatrix("density matrix has eigenvalue " + std::to_string(vals.front()));
}

namespace detail {

inline void require_two_qubit(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw NotDensityMatrix("concurrence needs a 4x4 two-qubit state");
}

inline ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  static const ComplexMatrix yy = kron(ops::sigma_y(), ops::sigma_y());
  return yy * rho.conj() * yy;
}

}  // namespace detail

inline constexpr double kRankTol = 1e-14;

/// Wootters concurrence max{0, s1 - s2 - s3 - s4}. The s_i are the square
/// roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho), obtained directly as
/// singular values of sqrt(rho~) sqrt(rho) so that vanishing s_i are not
/// inflated by a square root of rounding noise. Eigenvalues of rho below
/// kRankTol are treated as exact zeros.
inline double concurrence_general(const ComplexMatrix& rho) {
  detail::require_two_qubit(rho);
  validate_density(rho);
  const EigenSystem es = hermitian_eig(rho, kDensityEigTol);
  const ComplexMatrix root =
      spectral_map(es, [](double x) { return cplx{x > kRankTol ? std::sqrt(x) : 0.0}; });
  const ComplexMatrix flipped_root = detail::spin_flip(root);  // sqrt(rho~)
  const auto s = singular_values(flipped_root * root);
  return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

inline bool is_x_form(const ComplexMatrix& rho, double tol = 1e-10) {
  if (rho.dim() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(rho(i, j)) > tol) return false;
  return true;
}

/// Closed-form concurrence 2 max{0, |z| - sqrt(ad), |w| - sqrt(bc)} of an X-state
/// with diagonal (a, b, c, d), inner coherence z = rho(1,2), outer w = rho(0,3).
inline double concurrence_x(const ComplexMatrix& rho) {
  detail::require_two_qubit(rho);
  if (!is_x_form(rho)) throw NotXForm("concurrence_x: matrix has entries outside the X pattern");
  const double a = std::max(rho(0, 0).real(), 0.0);
  const double b = std::max(rho(1, 1).real(), 0.0);
  const double c = std::max(rho(2, 2).real(), 0.0);
  const double d = std::max(rho(3, 3).real(), 0.0);
  const double z = std::abs(rho(1, 2));
  const double w = std::abs(rho(0, 3));
  return 2.0 * std::max({0.0, z - std::sqrt(a * d), w - std::sqrt(b * c)});
}

/// Negativity across the cut that separates subsystem `part` of `layout` from the rest.
inline double negativity(const ComplexMatrix& rho, const HilbertLayout& layout, std::size_t part,
                         NegativityConvention convention) {
  const ComplexMatrix pt = partial_transpose(rho, layout, part);
  const auto vals = hermitian_eigenvalues(pt, kDensityEigTol);
  if (convention == NegativityConvention::Paper) return 2.0 * std::max(0.0, -vals.front());
  double sum = 0.0;
  for (double v : vals)
    if (v < 0.0) sum -= v;
  return 2.0 * sum;
}

inline double negativity(const DensityMatrix& rho, std::size_t part, NegativityConvention convention) {
  return negativity(rho.matrix, rho.layout, part, convention);
}

/// Restricts every factor of `rho` to its two lowest levels. Throws
/// NotDensityMatrix if more than `tol` of the weight lives outside that block.
inline DensityMatrix restrict_to_qubits(const DensityMatrix& rho, double tol = 1e-10) {
  const HilbertLayout& layout = rho.layout;
  std::vector<std::size_t> qdims(layout.subsystem_count(), 2);
  std::vector<std::string> labels(layout.labels().begin(), layout.labels().end());
  HilbertLayout qlayout(qdims, labels);
  std::vector<std::size_t> map;  // qubit-block index -> original index
  for (std::size_t q = 0; q < qlayout.total_dim(); ++q) {
    const auto digits = qlayout.split(q);
    for (std::size_t s = 0; s < digits.size(); ++s)
      if (layout.dim(s) < 2) throw NotDensityMatrix("restrict_to_qubits: factor smaller than a qubit");
    map.push_back(layout.join(digits));
  }
  ComplexMatrix out(qlayout.total_dim());
  double kept = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < map.size(); ++j) out(i, j) = rho.matrix(map[i], map[j]);
    kept += out(i, i).real();
  }
  const double total = rho.matrix.trace().real();
  if (total - kept > tol)
    throw NotDensityMatrix("restrict_to_qubits: weight " + std::to_string(total - kept) +
                           " outside the qubit block");
  return {std::move(out), std::move(qlayout)};
}

/// Evaluates `kind` on a two-party reduced state. Concurrence kinds require the
/// support to fit in the lowest two levels of each party.
inline double measure(const DensityMatrix& rho, MeasureKind kind) {
  if (rho.layout.subsystem_count() != 2) throw BadSubsystem("measure: state must have two parties");
  switch (kind) {
    case MeasureKind::ConcurrenceX: {
      const DensityMatrix q = rho.dim() == 4 ? rho : restrict_to_qubits(rho);
      return concurrence_x(q.matrix);
    }
    case MeasureKind::ConcurrenceGeneral: {
      const DensityMatrix q = rho.dim() == 4 ? rho : restrict_to_qubits(rho);
      return concurrence_general(q.matrix);
    }
    case MeasureKind::NegativityPaper: return negativity(rho, 1, NegativityConvention::Paper);
    case MeasureKind::NegativityStandard: return negativity(rho, 1, NegativityConvention::Standard);
  }
  return 0.0;
}

}  // namespace djc
