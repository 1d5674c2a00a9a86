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

// Closed-form amplitudes and entanglement curves of the double
// Jaynes-Cummings model at resonance (omega == nu). These are the published
// expressions transcribed as printed; they are compared against the numeric
// pipeline rather than trusted.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string_view>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/state.hpp"

namespace djc::analytic {

/// Amplitudes on |dd01>, |dd10>, |du00>, |ud00> (d = ground, u = excited).
struct GroundAmplitudes {
  cplx x1, x2, x3, x4;
};

inline GroundAmplitudes ground_amplitudes(double alpha, double g, double t) {
  const double c = std::cos(g * t), s = std::sin(g * t);
  return {c * std::cos(alpha), c * std::sin(alpha), -kI * s * std::cos(alpha),
          -kI * s * std::sin(alpha)};
}

/// y1..y8 on |uu01>, |uu10>, |du11>, |ud02>, |dd12>, |du20>, |ud11>, |dd21>.
struct ExcitedAmplitudes {
  std::array<cplx, 8> y;
  cplx operator[](std::size_t k) const { return y.at(k - 1); }  // 1-based like y_k
};

inline ExcitedAmplitudes excited_amplitudes(double alpha, double g, double nu, double t) {
  const double c1 = std::cos(g * t), s1 = std::sin(g * t);
  const double c2 = std::cos(std::sqrt(2.0) * g * t), s2 = std::sin(std::sqrt(2.0) * g * t);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const cplx ph = std::exp(cplx{0.0, -2.0 * nu * t});
  return {{c1 * c2 * ca * ph, c1 * c2 * sa * ph, -kI * s1 * c2 * ca * ph, -kI * c1 * s2 * ca * ph,
           -s1 * s2 * ca * ph, -kI * c1 * s2 * sa * ph, -kI * s1 * c2 * sa * ph,
           -s1 * s2 * sa * ph}};
}

/// Composite basis indices for the kets carrying x1..x4 / y1..y8.
inline std::array<std::size_t, 4> ground_kets(const HilbertLayout& layout) {
  using L = AtomLevel;
  return {basis_index(layout, L::Ground, L::Ground, 0, 1), basis_index(layout, L::Ground, L::Ground, 1, 0),
          basis_index(layout, L::Ground, L::Excited, 0, 0), basis_index(layout, L::Excited, L::Ground, 0, 0)};
}

inline std::array<std::size_t, 8> excited_kets(const HilbertLayout& layout) {
  using L = AtomLevel;
  return {basis_index(layout, L::Excited, L::Excited, 0, 1), basis_index(layout, L::Excited, L::Excited, 1, 0),
          basis_index(layout, L::Ground, L::Excited, 1, 1), basis_index(layout, L::Excited, L::Ground, 0, 2),
          basis_index(layout, L::Ground, L::Ground, 1, 2), basis_index(layout, L::Ground, L::Excited, 2, 0),
          basis_index(layout, L::Excited, L::Ground, 1, 1), basis_index(layout, L::Ground, L::Ground, 2, 1)};
}

inline StateVector ground_state(double alpha, double g, double t, const HilbertLayout& layout) {
  const auto x = ground_amplitudes(alpha, g, t);
  const auto kets = ground_kets(layout);
  StateVector psi{ComplexVector(layout.total_dim()), layout};
  const std::array<cplx, 4> amps{x.x1, x.x2, x.x3, x.x4};
  for (std::size_t k = 0; k < 4; ++k) psi.amplitudes[kets[k]] = amps[k];
  return psi;
}

inline StateVector excited_state(double alpha, double g, double nu, double t, const HilbertLayout& layout) {
  const auto y = excited_amplitudes(alpha, g, nu, t);
  const auto kets = excited_kets(layout);
  StateVector psi{ComplexVector(layout.total_dim()), layout};
  for (std::size_t k = 0; k < 8; ++k) psi.amplitudes[kets[k]] = y.y[k];
  return psi;
}

struct GroundConcurrences {
  double AB, ab, Aa, Ab;
};

inline GroundConcurrences ground_concurrences(double alpha, double g, double t) {
  const double s2a = std::abs(std::sin(2.0 * alpha));
  const double gt = g * t;
  return {std::pow(std::sin(gt), 2) * s2a, std::pow(std::cos(gt), 2) * s2a,
          std::pow(std::sin(alpha), 2) * std::abs(std::sin(2.0 * gt)),
          std::abs(std::sin(2.0 * alpha) * std::sin(2.0 * gt)) / 2.0};
}

/// f(t) whose positive part gives the excited-scenario atom-atom concurrence.
inline double excited_f(double alpha, double g, double t) {
  const double gt = g * t, r = std::sqrt(2.0) * gt;
  return 0.5 * std::pow(std::sin(gt), 2) * std::pow(std::cos(r), 2) * std::abs(std::sin(2.0 * alpha)) -
         0.25 * std::abs(std::sin(2.0 * gt) * std::sin(2.0 * r));
}

inline double excited_CAB(double alpha, double g, double t) {
  return 2.0 * std::max(0.0, excited_f(alpha, g, t));
}

/// Atom A / own-cavity negativity as printed: two bracketed terms, no outer max.
inline double excited_NAa(double alpha, double g, double t) {
  const double gt = g * t, r = std::sqrt(2.0) * gt;
  const double s1 = std::sin(gt), c1 = std::cos(gt), s2 = std::sin(r), c2 = std::cos(r);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double ca2 = ca * ca, sa2 = sa * sa;
  return std::sqrt(4.0 * s1 * s1 * c1 * c1 * ca2 * ca2 + std::pow(c2, 4) * sa2 * sa2) - c2 * c2 * sa2 +
         std::sqrt(4.0 * s2 * s2 * c2 * c2 * sa2 * sa2 + std::pow(s1, 4) * ca2 * ca2) - ca2 * s1 * s1;
}

/// Smallest partial-transpose eigenvalue of the atom A / remote-cavity state, as printed.
inline double excited_lambda_min_Ab(double alpha, double g, double t) {
  const double gt = g * t, r = std::sqrt(2.0) * gt;
  const double s1 = std::sin(gt), c1 = std::cos(gt), s2 = std::sin(r), c2 = std::cos(r);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double s1_2 = s1 * s1, c1_2 = c1 * c1, s2_2 = s2 * s2, c2_2 = c2 * c2;
  const double ca2 = ca * ca, sa2 = sa * sa;
  const double linear = c2_2 * ca2 * s1_2 + c1_2 * ca2 * s2_2 + s1_2 * s2_2 * sa2;
  const double radicand = c2_2 * c2_2 * ca2 * ca2 * s1_2 * s1_2 + c1_2 * c1_2 * ca2 * ca2 * s2_2 * s2_2 +
                          s1_2 * s1_2 * s2_2 * s2_2 * sa2 * sa2 +
                          6.0 * s1_2 * s1_2 * s2_2 * c2_2 * sa2 * ca2 -
                          2.0 * ca2 * ca2 * s1_2 * c1_2 * s2_2 * c2_2 -
                          2.0 * s2_2 * s2_2 * s1_2 * c1_2 * sa2 * ca2;
  return 0.5 * (linear - std::sqrt(std::max(radicand, 0.0)));
}

inline double excited_NAb(double alpha, double g, double t) {
  return 2.0 * std::max(0.0, -excited_lambda_min_Ab(alpha, g, t));
}

/// Unnormalized ground-scenario state after N projections of atom B onto |d>:
/// cos(a) cos^N(gt/N) |dd01> + sin(a) cos(gt) |dd10> - i sin(a) sin(gt) |ud00>.
inline StateVector zeno_ground_state(double alpha, double g, double t, int steps, const HilbertLayout& layout) {
  if (steps < 1) throw InvalidParams("zeno_ground_state: N must be at least 1");
  using L = AtomLevel;
  StateVector psi{ComplexVector(layout.total_dim()), layout};
  const double gt = g * t;
  psi.amplitudes[basis_index(layout, L::Ground, L::Ground, 0, 1)] =
      std::cos(alpha) * std::pow(std::cos(gt / steps), steps);
  psi.amplitudes[basis_index(layout, L::Ground, L::Ground, 1, 0)] = std::sin(alpha) * std::cos(gt);
  psi.amplitudes[basis_index(layout, L::Excited, L::Ground, 0, 0)] = -kI * std::sin(alpha) * std::sin(gt);
  return psi;
}

inline double zeno_ground_CAb_limit(double alpha, double g, double t) {
  return std::abs(std::sin(2.0 * alpha) * std::sin(g * t));
}

/// f(t)_min of the excited-scenario Zeno limit, transcribed for omega = nu = g.
inline double zeno_excited_f_min(double alpha, double g, double t) {
  const double gt = g * t, h = 1.5 * gt;
  const double ca2 = std::pow(std::cos(alpha), 2), sa2 = std::pow(std::sin(alpha), 2);
  const double c1_2 = std::pow(std::cos(gt), 2), s1_2 = std::pow(std::sin(gt), 2);
  const double ch2 = std::pow(std::cos(h), 2), sh2 = std::pow(std::sin(h), 2);
  const double linear = ca2 * c1_2 + 8.0 / 9.0 * sa2 * sh2;
  const double radicand = ca2 * ca2 * c1_2 * c1_2 + 64.0 / 81.0 * sa2 * sa2 * sh2 * sh2 +
                          4.0 * sa2 * ca2 * s1_2 * (ch2 + sh2 / 9.0) -
                          16.0 / 9.0 * sa2 * ca2 * c1_2 * sh2;
  return 0.5 * (linear - std::sqrt(std::max(radicand, 0.0)));
}

inline double zeno_excited_NAb_limit(double alpha, double g, double t) {
  return 2.0 * std::max(0.0, -zeno_excited_f_min(alpha, g, t));
}

enum class ClosedForm {
  CAB_ground,
  Cab_ground,
  CAa_ground,
  CAb_ground,
  CAB_excited,
  NAa_excited,
  NAb_excited,
  CAb_zeno_limit,
  NAb_zeno_limit,
};

inline std::string_view to_string(ClosedForm f) {
  switch (f) {
    case ClosedForm::CAB_ground: return "CAB_ground";
    case ClosedForm::Cab_ground: return "Cab_ground";
    case ClosedForm::CAa_ground: return "CAa_ground";
    case ClosedForm::CAb_ground: return "CAb_ground";
    case ClosedForm::CAB_excited: return "CAB_excited";
    case ClosedForm::NAa_excited: return "NAa_excited";
    case ClosedForm::NAb_excited: return "NAb_excited";
    case ClosedForm::CAb_zeno_limit: return "CAb_zeno_limit";
    case ClosedForm::NAb_zeno_limit: return "NAb_zeno_limit";
  }
  return "?";
}

inline double evaluate(ClosedForm f, double alpha, double g, double t) {
  switch (f) {
    case ClosedForm::CAB_ground: return ground_concurrences(alpha, g, t).AB;
    case ClosedForm::Cab_ground: return ground_concurrences(alpha, g, t).ab;
    case ClosedForm::CAa_ground: return ground_concurrences(alpha, g, t).Aa;
    case ClosedForm::CAb_ground: return ground_concurrences(alpha, g, t).Ab;
    case ClosedForm::CAB_excited: return excited_CAB(alpha, g, t);
    case ClosedForm::NAa_excited: return excited_NAa(alpha, g, t);
    case ClosedForm::NAb_excited: return excited_NAb(alpha, g, t);
    case ClosedForm::CAb_zeno_limit: return zeno_ground_CAb_limit(alpha, g, t);
    case ClosedForm::NAb_zeno_limit: return zeno_excited_NAb_limit(alpha, g, t);
  }
  return 0.0;
}

}  // namespace djc::analytic
