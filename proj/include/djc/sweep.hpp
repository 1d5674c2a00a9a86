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
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "djc/analytic.hpp"
#include "djc/config.hpp"
#include "djc/dynamics.hpp"
#include "djc/measures.hpp"
#include "djc/model.hpp"

namespace djc {

struct SeriesRecord {
  double alpha = 0.0;
  double gt = 0.0;
  Pair pair = Pair::AB;
  MeasureKind measure = MeasureKind::ConcurrenceX;
  double numeric = 0.0;
  std::optional<double> analytic;
  std::optional<double> abs_deviation;
  std::optional<double> success_probability;
  std::optional<analytic::ClosedForm> closed_form;
};

/// Closed form that predicts (pair, measure) for this configuration, if any.
/// All closed forms assume resonance; the excited Zeno limit additionally
/// assumes omega = nu = g.
inline std::optional<analytic::ClosedForm> closed_form_for(const ScenarioConfig& cfg, Pair pair,
                                                           MeasureKind measure) {
  using analytic::ClosedForm;
  const ModelParams& p = cfg.params;
  if (p.omega != p.nu) return std::nullopt;
  const bool conc = is_concurrence(measure);
  if (cfg.scenario == Scenario::Ground && !cfg.zeno_n) {
    if (!conc) return std::nullopt;
    switch (pair) {
      case Pair::AB: return ClosedForm::CAB_ground;
      case Pair::ab: return ClosedForm::Cab_ground;
      case Pair::Aa: return ClosedForm::CAa_ground;
      case Pair::Ab: return ClosedForm::CAb_ground;
    }
  }
  if (cfg.scenario == Scenario::Excited && !cfg.zeno_n) {
    if (pair == Pair::AB && conc) return ClosedForm::CAB_excited;
    if (pair == Pair::Aa && !conc) return ClosedForm::NAa_excited;
    if (pair == Pair::Ab && !conc) return ClosedForm::NAb_excited;
    return std::nullopt;
  }
  if (cfg.scenario == Scenario::Ground && pair == Pair::Ab && conc) return ClosedForm::CAb_zeno_limit;
  if (cfg.scenario == Scenario::Excited && pair == Pair::Ab && !conc && p.omega == p.g)
    return ClosedForm::NAb_zeno_limit;
  return std::nullopt;
}

/// Concurrence needs both parties supported on two levels. Atoms always are;
/// a cavity is in the ground scenario, and cavity b also is under excited
/// Zeno dynamics (atom B pinned to the excited level).
inline bool concurrence_applicable(const ScenarioConfig& cfg, Pair pair) {
  if (cfg.scenario == Scenario::Ground) return true;
  switch (pair) {
    case Pair::AB: return true;
    case Pair::Ab: return cfg.zeno_n.has_value();
    default: return false;
  }
}

inline void validate_sweep(const ScenarioConfig& cfg) {
  for (auto pair : cfg.pairs)
    for (auto m : cfg.measures)
      if (is_concurrence(m) && !concurrence_applicable(cfg, pair))
        throw ConfigError("field 'measures': " + std::string(to_string(m)) + " is undefined for pair " +
                          std::string(to_string(pair)) + " in the " + std::string(to_string(cfg.scenario)) +
                          " scenario (qutrit party); use a negativity measure");
}

namespace detail {

struct PointResult {
  std::vector<SeriesRecord> records;
};

inline PointResult evaluate_point(const ScenarioConfig& cfg, const Propagator& prop, const ComplexMatrix* projector,
                                  double alpha, double gt) {
  const double t = gt / cfg.params.g;
  const StateVector psi0 = build_initial_state({cfg.scenario, alpha}, prop.layout());
  StateVector psi;
  std::optional<double> success;
  if (cfg.zeno_n) {
    ZenoResult z = zeno_evolve(prop, *projector, psi0, t, *cfg.zeno_n);
    success = z.success_probability;
    psi = std::move(z.state);
  } else {
    psi = evolve(prop, psi0, t);
  }
  PointResult out;
  for (auto pair : cfg.pairs) {
    const auto keep = subsystems(pair);
    const DensityMatrix rho = reduced_density(psi, keep);
    for (auto m : cfg.measures) {
      SeriesRecord r;
      r.alpha = alpha;
      r.gt = gt;
      r.pair = pair;
      r.measure = m;
      r.numeric = measure(rho, m);
      r.success_probability = success;
      r.closed_form = closed_form_for(cfg, pair, m);
      if (r.closed_form) {
        r.analytic = analytic::evaluate(*r.closed_form, alpha, cfg.params.g, t);
        r.abs_deviation = std::abs(r.numeric - *r.analytic);
      }
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace detail

/// Evaluates every (alpha, gt, pair, measure) point. Rows are ordered
/// alpha-major, then gt, then pair, then measure, independent of threading.
inline std::vector<SeriesRecord> run_sweep(const ScenarioConfig& cfg) {
  validate_sweep(cfg);
  const Propagator prop(cfg.params);
  std::optional<ComplexMatrix> projector;
  if (cfg.zeno_n) projector = zeno_projector_for(cfg.scenario, prop.layout());

  const auto alphas = cfg.alpha.values();
  const auto gts = cfg.t_grid.values();
  const std::size_t points = alphas.size() * gts.size();
  std::vector<detail::PointResult> results(points);

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, points));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto work = [&] {
    try {
      for (std::size_t k = next++; k < points; k = next++)
        results[k] = detail::evaluate_point(cfg, prop, projector ? &*projector : nullptr, alphas[k / gts.size()],
                                            gts[k % gts.size()]);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = points;
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SeriesRecord> records;
  records.reserve(points * cfg.pairs.size() * cfg.measures.size());
  for (auto& r : results)
    for (auto& rec : r.records) records.push_back(std::move(rec));
  return records;
}

/// Shortest decimal form that parses back to the same double, at most 17 digits.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline constexpr std::string_view kCsvHeader = "alpha,gt,pair,measure,numeric,analytic,abs_dev,success_prob";

inline void write_csv(std::ostream& out, const std::vector<SeriesRecord>& records,
                      const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << kCsvHeader << '\n';
  const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& r : records) {
    out << format_double(r.alpha) << ',' << format_double(r.gt) << ',' << to_string(r.pair) << ','
        << to_string(r.measure) << ',' << format_double(r.numeric) << ',' << opt(r.analytic) << ','
        << opt(r.abs_deviation) << ',' << opt(r.success_probability) << '\n';
  }
}

inline std::vector<std::string> describe(const ScenarioConfig& cfg) {
  const auto grid = [](const Grid& g) {
    return g.count == 1 ? format_double(g.start)
                        : format_double(g.start) + ", " + format_double(g.stop) + ", " + std::to_string(g.count);
  };
  std::string pairs, measures;
  for (auto p : cfg.pairs) pairs += (pairs.empty() ? "" : ",") + std::string(to_string(p));
  for (auto m : cfg.measures) measures += (measures.empty() ? "" : ",") + std::string(to_string(m));
  return {
      "double Jaynes-Cummings sweep",
      "scenario = " + std::string(to_string(cfg.scenario)),
      "alpha = " + grid(cfg.alpha),
      "t_grid = " + grid(cfg.t_grid) + "  (units of g*t)",
      "g = " + format_double(cfg.params.g) + ", omega = " + format_double(cfg.params.omega) +
          ", nu = " + format_double(cfg.params.nu) + ", n_max = " + std::to_string(cfg.params.n_max),
      "zeno_n = " + (cfg.zeno_n ? std::to_string(*cfg.zeno_n) : std::string("none")),
      "pairs = " + pairs,
      "measures = " + measures,
  };
}

inline void write_csv_file(const std::string& path, const ScenarioConfig& cfg,
                           const std::vector<SeriesRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_csv(out, records, describe(cfg));
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace djc
