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

// Cached spectral propagator vs. per-call scaling-and-squaring exponential.

#pragma once

#include <chrono>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "djc/dynamics.hpp"
#include "djc/sweep.hpp"

namespace djc {

struct BenchConfig {
  std::size_t calls = 10000;
  ModelParams params;
  double t_max = 2.0 * std::numbers::pi;  // evolution times cycle over (0, t_max]
};

struct BenchRow {
  std::string strategy;
  std::size_t calls;
  double total_seconds;
  double seconds_per_call;
};

struct BenchResult {
  std::size_t dim;
  std::vector<BenchRow> rows;          // [0] cached spectral, [1] scaling and squaring
  double setup_seconds;                // one-off eigendecomposition
  double max_state_difference;         // between strategies over all calls

  const BenchRow& spectral() const { return rows.at(0); }
  const BenchRow& scaling_squaring() const { return rows.at(1); }
};

inline BenchResult bench_propagator(const BenchConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };
  const std::size_t calls = std::max<std::size_t>(cfg.calls, 1);

  const auto t0 = clock::now();
  const Propagator prop(cfg.params);
  const double setup = seconds(clock::now() - t0);

  const StateVector psi0 = build_initial_state({Scenario::Excited, std::numbers::pi / 4}, prop.layout());
  std::vector<double> times(calls);
  for (std::size_t k = 0; k < calls; ++k) times[k] = cfg.t_max * static_cast<double>(k + 1) / static_cast<double>(calls);

  std::vector<ComplexVector> spectral(calls);
  const auto t1 = clock::now();
  for (std::size_t k = 0; k < calls; ++k) spectral[k] = prop.apply(psi0.amplitudes, times[k]);
  const double spectral_total = seconds(clock::now() - t1);

  const ComplexMatrix minus_i_h = prop.hamiltonian() * cplx{0.0, -1.0};
  double max_diff = 0.0;
  const auto t2 = clock::now();
  for (std::size_t k = 0; k < calls; ++k) {
    const ComplexVector psi = expm_scaling_squaring(minus_i_h * cplx{times[k]}) * psi0.amplitudes;
    max_diff = std::max(max_diff, max_abs_diff(psi, spectral[k]));
  }
  const double ss_total = seconds(clock::now() - t2);

  const auto dc = static_cast<double>(calls);
  return {prop.layout().total_dim(),
          {{"cached_spectral", calls, spectral_total, spectral_total / dc},
           {"scaling_squaring", calls, ss_total, ss_total / dc}},
          setup,
          max_diff};
}

inline void write_bench_csv(std::ostream& out, const BenchResult& r) {
  out << "# propagator benchmark, dim = " << r.dim << ", eigendecomposition setup s = "
      << format_double(r.setup_seconds) << ", max state difference = " << format_double(r.max_state_difference)
      << '\n';
  out << "strategy,calls,total_s,per_call_s\n";
  for (const auto& row : r.rows)
    out << row.strategy << ',' << row.calls << ',' << format_double(row.total_seconds) << ','
        << format_double(row.seconds_per_call) << '\n';
}

}  // namespace djc
