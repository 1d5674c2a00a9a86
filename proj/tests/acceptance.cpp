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


// Acceptance suite. Prints one PASS/FAIL line per criterion; exit status is
// nonzero if any selected criterion fails. Run one with --criterion N.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>

#include "djc/analytic.hpp"
#include "djc/config.hpp"
#include "djc/dynamics.hpp"
#include "djc/measures.hpp"
#include "djc/report.hpp"
#include "djc/sweep.hpp"
#include "test_support.hpp"

namespace {

using namespace djc;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) { return format_double(v); }

ScenarioConfig config(Scenario s, Grid alpha, Grid gt, std::vector<Pair> pairs, std::vector<MeasureKind> measures) {
  ScenarioConfig cfg;
  cfg.scenario = s;
  cfg.alpha = alpha;
  cfg.t_grid = gt;
  cfg.pairs = std::move(pairs);
  cfg.measures = std::move(measures);
  return cfg;
}

double max_deviation(const std::vector<SeriesRecord>& records) {
  double m = 0.0;
  for (const auto& r : records) m = std::max(m, r.abs_deviation.value_or(0.0));
  return m;
}

std::vector<double> numeric_series(const std::vector<SeriesRecord>& records) {
  std::vector<double> v;
  for (const auto& r : records) v.push_back(r.numeric);
  return v;
}

// Sum rule C^AB + C^ab = |sin 2 alpha|.
Outcome criterion1() {
  const auto records = run_sweep(config(Scenario::Ground, {0.0, kPi, 100}, {0.0, kPi, 100}, {Pair::AB, Pair::ab},
                                        {MeasureKind::ConcurrenceGeneral}));
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < records.size(); k += 2)
    worst = std::max(worst, std::abs(records[k].numeric + records[k + 1].numeric -
                                     std::abs(std::sin(2.0 * records[k].alpha))));
  return {worst <= 1e-9, "max |C_AB + C_ab - |sin 2a|| = " + fmt(worst) + " over 100x100"};
}

Outcome criterion2() {
  const auto records = run_sweep(config(Scenario::Ground, {0.0, kPi, 50}, {0.0, kPi, 50}, {kAllPairs.begin(), kAllPairs.end()},
                                        {MeasureKind::ConcurrenceX, MeasureKind::ConcurrenceGeneral}));
  const double dev = max_deviation(records);
  return {dev <= 1e-9, "max deviation over AB, ab, Aa, Ab on 50x50 = " + fmt(dev)};
}

Outcome criterion3() {
  const auto records = run_sweep(config(Scenario::Ground, Grid::single(kPi / 4), Grid::single(kPi / 2), {Pair::AB},
                                        {MeasureKind::ConcurrenceGeneral}));
  const double c = records.at(0).numeric;
  return {std::abs(c - 1.0) <= 1e-9, "C_AB(pi/4, pi/2) = " + fmt(c)};
}

// Zero-interval structure is checked over two Rabi periods: on [0, pi] the
// second zero run is not followed by a revival.
const Grid kEsdGrid{0.0, 2.0 * kPi, 401};

Outcome esd_outcome(const std::vector<double>& series, const std::string& what) {
  const auto runs = zero_intervals(series);
  for (const auto& z : runs)
    if (z.bounded) {
      const double step = (kEsdGrid.stop - kEsdGrid.start) / static_cast<double>(kEsdGrid.count - 1);
      return {true, what + " zero on gt in [" + fmt(z.first * step) + ", " + fmt(z.last * step) +
                        "] between live points"};
    }
  return {false, what + ": no bounded zero interval on the pinned grid"};
}

Outcome criterion4() {
  const auto grid = run_sweep(config(Scenario::Excited, {0.0, kPi, 50}, {0.0, kPi, 50}, {Pair::AB},
                                     {MeasureKind::ConcurrenceX, MeasureKind::ConcurrenceGeneral}));
  const double dev = max_deviation(grid);
  const auto line = run_sweep(config(Scenario::Excited, Grid::single(kPi / 4), kEsdGrid, {Pair::AB},
                                     {MeasureKind::ConcurrenceGeneral}));
  const Outcome esd = esd_outcome(numeric_series(line), "C_AB");
  return {dev <= 1e-9 && esd.pass, "max deviation on 50x50 = " + fmt(dev) + "; " + esd.detail};
}

Outcome criterion5() {
  const auto line = run_sweep(config(Scenario::Excited, Grid::single(kPi / 4), kEsdGrid, {Pair::Ab},
                                     {MeasureKind::NegativityPaper}));
  return esd_outcome(numeric_series(line), "N_Ab");
}

Outcome criterion6() {
  const auto records = run_sweep(config(Scenario::Ground, Grid::single(kPi / 4), {0.0, kPi, 2000}, {Pair::Ab},
                                        {MeasureKind::ConcurrenceGeneral}));
  double peak = 0.0;
  for (const auto& r : records) peak = std::max(peak, r.numeric);
  return {peak >= 0.5 - 1e-6 && peak <= 0.5 + 1e-9, "max C_Ab = " + fmt(peak)};
}

double zeno_ground_sup(int steps) {
  ScenarioConfig cfg = config(Scenario::Ground, Grid::single(kPi / 4), {0.0, kPi, 201}, {Pair::Ab},
                              {MeasureKind::ConcurrenceGeneral});
  cfg.zeno_n = steps;
  return max_deviation(run_sweep(cfg));
}

Outcome criterion7() {
  const double d2000 = zeno_ground_sup(2000), d4000 = zeno_ground_sup(4000);
  const double ratio = d2000 / d4000;
  return {d2000 <= 5e-3 && ratio >= 1.8,
          "sup deviation N=2000: " + fmt(d2000) + ", N=4000: " + fmt(d4000) + ", ratio " + fmt(ratio)};
}

Outcome criterion8() {
  const Grid gt{0.0, kPi, 100};
  ScenarioConfig zeno = config(Scenario::Excited, Grid::single(kPi / 4), gt, {Pair::Ab}, {MeasureKind::NegativityPaper});
  zeno.zeno_n = 2000;
  const auto z = run_sweep(zeno);
  const auto free = run_sweep(config(Scenario::Excited, Grid::single(kPi / 4), gt, {Pair::Ab},
                                     {MeasureKind::NegativityPaper}));
  const double dev = max_deviation(z);
  std::size_t dominance_failures = 0;
  double first_failure = -1.0;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k].analytic.value_or(0.0) >= 1e-3 && !(z[k].numeric > free[k].numeric)) {
      if (dominance_failures++ == 0) first_failure = z[k].gt;
    }
  std::string detail = "max |N_Ab(N=2000) - limit| = " + fmt(dev) + " at 100 points; dominance fails at " +
                       std::to_string(dominance_failures) + " points";
  if (dominance_failures) detail += " (first gt = " + fmt(first_failure) + ")";
  return {dev <= 5e-3 && dominance_failures == 0, detail};
}

Outcome criterion9() {
  namespace t = djc::testing;
  std::string failures;
  const auto check = [&](bool ok, const std::string& name, double worst) {
    if (!ok) failures += " " + name + "(" + fmt(worst) + ")";
  };

  const Propagator prop(ModelParams{});
  double unitary = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double t1 = 0.37 * k, t2 = 1.0 + 0.11 * k;
    const ComplexMatrix u1 = prop.unitary(t1), u2 = prop.unitary(t2);
    unitary = std::max(unitary, max_abs_diff(u1 * u1.adjoint(), ComplexMatrix::identity(36)));
    unitary = std::max(unitary, max_abs_diff(u1 * u2, prop.unitary(t1 + t2)));
  }
  check(unitary <= 1e-9, "unitarity/group-law", unitary);

  const ComplexMatrix n_op = excitation_operator(prop.layout());
  double excitation = (prop.hamiltonian() * n_op - n_op * prop.hamiltonian()).max_abs();
  for (auto s : {Scenario::Ground, Scenario::Excited}) {
    const StateVector psi0 = build_initial_state({s, 0.7}, prop.layout());
    const double n0 = std::real(inner(psi0.amplitudes, n_op * psi0.amplitudes));
    for (double time = 0.0; time < 30.0; time += 0.3) {
      const ComplexVector psi = prop.apply(psi0.amplitudes, time);
      excitation = std::max(excitation, std::abs(std::real(inner(psi, n_op * psi)) - n0));
    }
  }
  check(excitation <= 1e-10, "excitation-conservation", excitation);

  const HilbertLayout qubit_qutrit({2, 3}, {"A", "b"});
  const HilbertLayout& full = prop.layout();
  double involution = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix small = t::random_density(6);
    for (std::size_t s : {0u, 1u})
      involution = std::max(involution, max_abs_diff(partial_transpose(partial_transpose(small, qubit_qutrit, s),
                                                                       qubit_qutrit, s), small));
  }
  for (int k = 0; k < 5; ++k) {
    const ComplexMatrix big = t::random_density(36);
    for (std::size_t s = 0; s < 4; ++s)
      involution = std::max(involution, max_abs_diff(partial_transpose(partial_transpose(big, full, s), full, s), big));
  }
  check(involution == 0.0, "partial-transpose-involution", involution);

  double xstate = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix rho = t::random_x_state();
    xstate = std::max(xstate, std::abs(concurrence_x(rho) - concurrence_general(rho)));
  }
  check(xstate <= 1e-9, "x-state-fast-path", xstate);

  double local = 0.0;
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix rho = t::random_density(4, 1 + k % 4);
    const ComplexMatrix u = kron(t::random_unitary(2), t::random_unitary(2));
    local = std::max(local, std::abs(concurrence_general(u * rho * u.adjoint()) - concurrence_general(rho)));
  }
  check(local <= 1e-9, "local-unitary-invariance", local);

  return {failures.empty(), failures.empty() ? "unitarity " + fmt(unitary) + ", excitation " + fmt(excitation) +
                                                   ", involution " + fmt(involution) + ", x-state " + fmt(xstate) +
                                                   ", local-unitary " + fmt(local)
                                             : "failed:" + failures};
}

Outcome criterion10() {
  const auto records = run_sweep(config(Scenario::Excited, {0.0, kPi, 50}, {0.0, kPi, 50}, {Pair::Aa},
                                        {MeasureKind::NegativityPaper, MeasureKind::NegativityStandard}));
  const double threshold = 1e-6;
  const auto rep = report_discrepancies(records, threshold);
  const std::string text = format_report(rep);
  const auto json = report_json(rep);

  std::size_t over = 0, itemized = 0;
  for (const auto& r : records) {
    if (!r.abs_deviation || *r.abs_deviation <= threshold) continue;
    ++over;
    for (const auto& f : rep.formulas)
      if (f.measure == r.measure)
        for (const auto& p : f.flagged)
          if (p.alpha == r.alpha && p.gt == r.gt && p.deviation == *r.abs_deviation) {
            ++itemized;
            goto next;
          }
  next:;
  }
  const bool named = rep.conventions.size() == 1 && !text.empty() && json.contains("conventions");
  std::string detail = "residuals above 1e-6: " + std::to_string(over) + ", itemized: " + std::to_string(itemized);
  if (named)
    detail += "; matching convention " + std::string(to_string(rep.conventions[0].best)) + " (max dev paper " +
              fmt(rep.conventions[0].paper_max_deviation) + ", standard " +
              fmt(rep.conventions[0].standard_max_deviation) + ")";
  return {named && over == itemized, detail};
}

const std::function<Outcome()> kCriteria[] = {criterion1, criterion2, criterion3, criterion4,  criterion5,
                                              criterion6, criterion7, criterion8, criterion9, criterion10};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 64;
    }
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 64;
  }
  bool all_pass = true;
  for (int c = 1; c <= 10; ++c) {
    if (only && c != only) continue;
    Outcome o;
    try {
      o = kCriteria[c - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", c, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
