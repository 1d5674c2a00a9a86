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


#include <numbers>

#include <gtest/gtest.h>

#include "djc/analytic.hpp"
#include "djc/dynamics.hpp"
#include "djc/measures.hpp"
#include "djc/report.hpp"

namespace djc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-9;

struct Pipeline {
  Propagator prop{ModelParams{}};
  double value(Scenario s, double alpha, double gt, std::initializer_list<std::size_t> keep, MeasureKind m) const {
    const StateVector psi = evolve(prop, build_initial_state({s, alpha}, prop.layout()), gt);
    return measure(reduced_density(psi, keep), m);
  }
};

TEST(Amplitudes, Normalized) {
  for (double alpha : {0.0, 0.4, kPi / 4, 1.3})
    for (double gt = 0.0; gt < 7.0; gt += 0.37) {
      const auto x = analytic::ground_amplitudes(alpha, 1.0, gt);
      EXPECT_NEAR(std::norm(x.x1) + std::norm(x.x2) + std::norm(x.x3) + std::norm(x.x4), 1.0, 1e-14);
      const auto y = analytic::excited_amplitudes(alpha, 1.0, 1.0, gt);
      double sum = 0.0;
      for (std::size_t k = 1; k <= 8; ++k) sum += std::norm(y[k]);
      EXPECT_NEAR(sum, 1.0, 1e-14);
    }
}

// Frozen from two independent routes: the numeric pipeline and cos^2(pi / sqrt 2).
TEST(Oracle, ExcitedAtomConcurrenceAtQuarterPeriod) {
  const double frozen = 0.36687232897929156;
  EXPECT_NEAR(analytic::excited_CAB(kPi / 4, 1.0, kPi / 2), frozen, 1e-12);
  EXPECT_NEAR(Pipeline{}.value(Scenario::Excited, kPi / 4, kPi / 2, {kAtomA, kAtomB}, MeasureKind::ConcurrenceGeneral),
              frozen, 1e-12);
}

TEST(Ground, SumRuleAtomsPlusPhotons) {
  for (double alpha : {0.2, kPi / 4, 1.1})
    for (double gt = 0.0; gt <= kPi; gt += 0.1) {
      const auto c = analytic::ground_concurrences(alpha, 1.0, gt);
      EXPECT_NEAR(c.AB + c.ab, std::abs(std::sin(2 * alpha)), 1e-14);
    }
}

TEST(Ground, AllPairsMatchNumeric) {
  const Pipeline p;
  for (double alpha : {0.0, 0.35, kPi / 4, 1.2, kPi / 2})
    for (double gt = 0.0; gt <= kPi + 1e-12; gt += kPi / 20) {
      const auto c = analytic::ground_concurrences(alpha, 1.0, gt);
      for (auto m : {MeasureKind::ConcurrenceX, MeasureKind::ConcurrenceGeneral}) {
        EXPECT_NEAR(p.value(Scenario::Ground, alpha, gt, {kAtomA, kAtomB}, m), c.AB, kTol);
        EXPECT_NEAR(p.value(Scenario::Ground, alpha, gt, {kModeA, kModeB}, m), c.ab, kTol);
        EXPECT_NEAR(p.value(Scenario::Ground, alpha, gt, {kAtomA, kModeA}, m), c.Aa, kTol);
        EXPECT_NEAR(p.value(Scenario::Ground, alpha, gt, {kAtomA, kModeB}, m), c.Ab, kTol);
      }
    }
}

TEST(Excited, AtomConcurrenceMatchesNumeric) {
  const Pipeline p;
  for (double alpha : {0.1, 0.5, kPi / 4, 1.4})
    for (double gt = 0.0; gt <= kPi + 1e-12; gt += kPi / 30)
      EXPECT_NEAR(p.value(Scenario::Excited, alpha, gt, {kAtomA, kAtomB}, MeasureKind::ConcurrenceX),
                  analytic::excited_CAB(alpha, 1.0, gt), kTol);
}

TEST(Excited, OwnCavityNegativityIsStandardConvention) {
  const Pipeline p;
  double paper_gap = 0.0;
  for (double alpha : {0.2, kPi / 4, 1.0})
    for (double gt = 0.0; gt <= kPi + 1e-12; gt += kPi / 30) {
      const double closed = analytic::excited_NAa(alpha, 1.0, gt);
      EXPECT_NEAR(p.value(Scenario::Excited, alpha, gt, {kAtomA, kModeA}, MeasureKind::NegativityStandard), closed,
                  kTol);
      paper_gap = std::max(paper_gap, std::abs(closed - p.value(Scenario::Excited, alpha, gt, {kAtomA, kModeA},
                                                                 MeasureKind::NegativityPaper)));
    }
  EXPECT_GT(paper_gap, 0.1);
}

TEST(Excited, OwnCavityClosedFormIsNonNegative) {
  for (double alpha = 0.0; alpha <= kPi / 2; alpha += 0.05)
    for (double gt = 0.0; gt <= kPi; gt += 0.01) EXPECT_GE(analytic::excited_NAa(alpha, 1.0, gt), -1e-12);
}

// The printed eigenvalue belongs to one block of the transposed state; the
// numeric minimum over the full spectrum can only be lower.
TEST(Excited, RemoteCavityClosedFormIsALowerBound) {
  const Pipeline p;
  double gap = 0.0;
  for (double gt = 0.0; gt <= kPi + 1e-12; gt += kPi / 60) {
    const double closed = analytic::excited_NAb(kPi / 4, 1.0, gt);
    const double numeric = p.value(Scenario::Excited, kPi / 4, gt, {kAtomA, kModeB}, MeasureKind::NegativityPaper);
    EXPECT_GE(numeric, closed - kTol) << gt;
    gap = std::max(gap, numeric - closed);
  }
  EXPECT_GT(gap, 0.05);
}

TEST(Excited, DeathAndRebirthOverTwoPeriods) {
  const Pipeline p;
  std::vector<double> cab, nab;
  for (int k = 0; k < 401; ++k) {
    const double gt = 2 * kPi * k / 400;
    cab.push_back(analytic::excited_CAB(kPi / 4, 1.0, gt));
    nab.push_back(p.value(Scenario::Excited, kPi / 4, gt, {kAtomA, kModeB}, MeasureKind::NegativityPaper));
  }
  EXPECT_TRUE(has_death_and_birth(cab));
  EXPECT_TRUE(has_death_and_birth(nab));
}

TEST(Zeno, GroundLimitFromFiniteN) {
  const Propagator prop(ModelParams{});
  const ComplexMatrix proj = zeno_projector_for(Scenario::Ground, prop.layout());
  const StateVector psi0 = build_initial_state({Scenario::Ground, kPi / 4}, prop.layout());
  for (double gt = 0.1; gt < kPi; gt += 0.3) {
    const ZenoResult r = zeno_evolve(prop, proj, psi0, gt, 2000);
    const double c = measure(reduced_density(r.state, {kAtomA, kModeB}), MeasureKind::ConcurrenceGeneral);
    EXPECT_NEAR(c, analytic::zeno_ground_CAb_limit(kPi / 4, 1.0, gt), 5e-3);
  }
}

TEST(Zeno, TranscribedLimitDominatesFreeNegativity) {
  for (int k = 1; k < 1000; ++k) {
    const double gt = kPi * k / 1000;
    EXPECT_GE(analytic::zeno_excited_NAb_limit(kPi / 4, 1.0, gt), analytic::excited_NAb(kPi / 4, 1.0, gt) - 1e-12);
  }
}

TEST(ClosedForm, EvaluateDispatch) {
  const double a = 0.6, gt = 1.9;
  const auto c = analytic::ground_concurrences(a, 1.0, gt);
  using F = analytic::ClosedForm;
  EXPECT_EQ(analytic::evaluate(F::CAB_ground, a, 1.0, gt), c.AB);
  EXPECT_EQ(analytic::evaluate(F::Cab_ground, a, 1.0, gt), c.ab);
  EXPECT_EQ(analytic::evaluate(F::CAa_ground, a, 1.0, gt), c.Aa);
  EXPECT_EQ(analytic::evaluate(F::CAb_ground, a, 1.0, gt), c.Ab);
  EXPECT_EQ(analytic::evaluate(F::CAB_excited, a, 1.0, gt), analytic::excited_CAB(a, 1.0, gt));
  EXPECT_EQ(analytic::evaluate(F::NAa_excited, a, 1.0, gt), analytic::excited_NAa(a, 1.0, gt));
  EXPECT_EQ(analytic::evaluate(F::NAb_excited, a, 1.0, gt), analytic::excited_NAb(a, 1.0, gt));
  EXPECT_EQ(analytic::evaluate(F::CAb_zeno_limit, a, 1.0, gt), analytic::zeno_ground_CAb_limit(a, 1.0, gt));
  EXPECT_EQ(analytic::evaluate(F::NAb_zeno_limit, a, 1.0, gt), analytic::zeno_excited_NAb_limit(a, 1.0, gt));
  EXPECT_EQ(analytic::to_string(F::NAb_zeno_limit), "NAb_zeno_limit");
}

}  // namespace
}  // namespace djc
