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


#include <algorithm>
#include <numbers>

#include <gtest/gtest.h>

#include "djc/model.hpp"

namespace djc {
namespace {

TEST(Layout, DimensionsForDefaultTruncation) {
  const HilbertLayout layout = build_layout(2);
  EXPECT_EQ(layout.total_dim(), 36u);
  EXPECT_TRUE(std::ranges::equal(layout.dims(), std::vector<std::size_t>{2, 2, 3, 3}));
  EXPECT_EQ(build_layout(4).total_dim(), 100u);
}

TEST(Layout, TruncationTooSmall) {
  EXPECT_THROW(build_layout(1), TruncationTooSmall);
  ModelParams p;
  p.n_max = 0;
  EXPECT_THROW(p.validate(), TruncationTooSmall);
}

TEST(Params, Validation) {
  ModelParams p;
  EXPECT_NO_THROW(p.validate());
  p.g = 0.0;
  EXPECT_THROW(p.validate(), InvalidParams);
  p = {};
  p.nu = -1.0;
  EXPECT_THROW(p.validate(), InvalidParams);
  p = {};
  p.omega = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(p.validate(), InvalidParams);
}

TEST(Basis, IndexOrderingIsAtomMajor) {
  const HilbertLayout layout = build_layout(2);
  using L = AtomLevel;
  EXPECT_EQ(basis_index(layout, L::Excited, L::Excited, 0, 0), 0u);
  EXPECT_EQ(basis_index(layout, L::Excited, L::Excited, 0, 1), 1u);
  EXPECT_EQ(basis_index(layout, L::Excited, L::Excited, 1, 0), 3u);
  EXPECT_EQ(basis_index(layout, L::Excited, L::Ground, 0, 0), 9u);
  EXPECT_EQ(basis_index(layout, L::Ground, L::Excited, 0, 0), 18u);
  EXPECT_EQ(basis_index(layout, L::Ground, L::Ground, 2, 2), 35u);
}

TEST(Operators, LadderAlgebra) {
  const auto a = ops::annihilation(4), ad = ops::creation(4);
  const ComplexMatrix comm = a * ad - ad * a;
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(std::real(comm(k, k)), 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(ad * a, ops::number(4)), 1e-15);
  EXPECT_LT(max_abs_diff(ops::sigma_plus() * ops::sigma_minus(), ops::atom_projector(AtomLevel::Excited)), 1e-300);
  EXPECT_LT(max_abs_diff(ops::sigma_plus() * ops::sigma_minus() - ops::sigma_minus() * ops::sigma_plus(), ops::sigma_z()),
            1e-300);
}

TEST(Hamiltonian, HermitianAndDiagonalEnergies) {
  ModelParams p{0.7, 1.3, 0.4, 2};
  const HilbertLayout layout = build_layout(p.n_max);
  const ComplexMatrix h = build_hamiltonian(p, layout);
  EXPECT_TRUE(h.is_hermitian(0.0));
  using L = AtomLevel;
  EXPECT_NEAR(std::real(h(basis_index(layout, L::Excited, L::Excited, 0, 0), basis_index(layout, L::Excited, L::Excited, 0, 0))),
              1.3, 1e-15);
  const std::size_t i = basis_index(layout, L::Ground, L::Excited, 2, 1);
  EXPECT_NEAR(std::real(h(i, i)), 3 * 0.4, 1e-15);
}

TEST(Hamiltonian, CouplingMatrixElements) {
  ModelParams p{0.7, 1.0, 1.0, 2};
  const HilbertLayout layout = build_layout(2);
  const ComplexMatrix h = build_hamiltonian(p, layout);
  using L = AtomLevel;
  // <d,*,1,*| H |u,*,0,*> = g and <d,*,2,*| H |u,*,1,*> = sqrt(2) g
  EXPECT_NEAR(std::abs(h(basis_index(layout, L::Ground, L::Ground, 1, 0), basis_index(layout, L::Excited, L::Ground, 0, 0))),
              0.7, 1e-15);
  EXPECT_NEAR(std::abs(h(basis_index(layout, L::Ground, L::Ground, 0, 2), basis_index(layout, L::Ground, L::Excited, 0, 1))),
              0.7 * std::numbers::sqrt2, 1e-15);
  // No counter-rotating terms.
  EXPECT_EQ(std::abs(h(basis_index(layout, L::Excited, L::Ground, 1, 0), basis_index(layout, L::Ground, L::Ground, 0, 0))), 0.0);
}

TEST(Hamiltonian, ConservesExcitationNumber) {
  for (const ModelParams p : {ModelParams{}, ModelParams{0.3, 2.0, 0.5, 3}}) {
    const HilbertLayout layout = build_layout(p.n_max);
    const ComplexMatrix h = build_hamiltonian(p, layout);
    const ComplexMatrix n = excitation_operator(layout);
    EXPECT_LT((h * n - n * h).max_abs(), 1e-13);
  }
}

TEST(InitialState, GroundAndExcited) {
  const HilbertLayout layout = build_layout(2);
  const double alpha = 0.3;
  using L = AtomLevel;
  const StateVector g = build_initial_state({Scenario::Ground, alpha}, layout);
  EXPECT_NEAR(g.norm(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(std::real(g[basis_index(layout, L::Ground, L::Ground, 0, 1)]), std::cos(alpha));
  EXPECT_DOUBLE_EQ(std::real(g[basis_index(layout, L::Ground, L::Ground, 1, 0)]), std::sin(alpha));
  const StateVector e = build_initial_state({Scenario::Excited, alpha}, layout);
  EXPECT_DOUBLE_EQ(std::real(e[basis_index(layout, L::Excited, L::Excited, 0, 1)]), std::cos(alpha));
  EXPECT_DOUBLE_EQ(std::real(e[basis_index(layout, L::Excited, L::Excited, 1, 0)]), std::sin(alpha));
}

TEST(Projector, IdempotentAndTargetsAtomB) {
  const HilbertLayout layout = build_layout(2);
  for (auto s : {Scenario::Ground, Scenario::Excited}) {
    const ComplexMatrix p = zeno_projector_for(s, layout);
    EXPECT_TRUE(p.is_hermitian(0.0));
    EXPECT_LT(max_abs_diff(p * p, p), 1e-300);
    EXPECT_NEAR(std::real(p.trace()), 18.0, 1e-15);
  }
  using L = AtomLevel;
  const ComplexMatrix pg = zeno_projector_for(Scenario::Ground, layout);
  const std::size_t kept = basis_index(layout, L::Excited, L::Ground, 1, 2);
  const std::size_t dropped = basis_index(layout, L::Ground, L::Excited, 1, 2);
  EXPECT_EQ(std::real(pg(kept, kept)), 1.0);
  EXPECT_EQ(std::real(pg(dropped, dropped)), 0.0);
}

}  // namespace
}  // namespace djc
