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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "djc/analytic.hpp"
#include "djc/sweep.hpp"

namespace djc {

struct FlaggedPoint {
  double alpha;
  double gt;
  double numeric;
  double analytic;
  double deviation;
};

struct FormulaSummary {
  analytic::ClosedForm form;
  MeasureKind measure;
  Pair pair;
  std::size_t count = 0;
  double max_deviation = 0.0;
  double mean_deviation = 0.0;
  double worst_alpha = 0.0;
  double worst_gt = 0.0;
  std::vector<FlaggedPoint> flagged;  // deviation > flag threshold

  bool clean() const { return flagged.empty(); }
};

/// Which negativity convention reproduces a printed negativity formula better.
struct ConventionVerdict {
  analytic::ClosedForm form;
  MeasureKind best;
  double paper_max_deviation;
  double standard_max_deviation;
};

struct DiscrepancyReport {
  double flag_threshold = 1e-6;
  std::vector<FormulaSummary> formulas;
  std::vector<ConventionVerdict> conventions;

  double max_deviation() const {
    double m = 0.0;
    for (const auto& f : formulas) m = std::max(m, f.max_deviation);
    return m;
  }
  std::size_t flagged_count() const {
    std::size_t n = 0;
    for (const auto& f : formulas) n += f.flagged.size();
    return n;
  }
};

inline DiscrepancyReport report_discrepancies(const std::vector<SeriesRecord>& records, double flag_threshold = 1e-6) {
  DiscrepancyReport rep;
  rep.flag_threshold = flag_threshold;
  std::map<std::pair<int, int>, std::size_t> index;  // (form, measure) -> formulas slot
  for (const auto& r : records) {
    if (!r.closed_form || !r.analytic || !r.abs_deviation) continue;
    const auto key = std::make_pair(static_cast<int>(*r.closed_form), static_cast<int>(r.measure));
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rep.formulas.size()).first;
      FormulaSummary fresh;
      fresh.form = *r.closed_form;
      fresh.measure = r.measure;
      fresh.pair = r.pair;
      rep.formulas.push_back(std::move(fresh));
    }
    FormulaSummary& s = rep.formulas[it->second];
    const double dev = *r.abs_deviation;
    ++s.count;
    s.mean_deviation += dev;
    if (dev > s.max_deviation || s.count == 1) {
      s.max_deviation = dev;
      s.worst_alpha = r.alpha;
      s.worst_gt = r.gt;
    }
    if (dev > flag_threshold) s.flagged.push_back({r.alpha, r.gt, r.numeric, *r.analytic, dev});
  }
  for (auto& s : rep.formulas)
    if (s.count) s.mean_deviation /= static_cast<double>(s.count);

  std::map<int, std::pair<std::optional<double>, std::optional<double>>> neg;
  for (const auto& s : rep.formulas) {
    if (s.measure == MeasureKind::NegativityPaper) neg[static_cast<int>(s.form)].first = s.max_deviation;
    if (s.measure == MeasureKind::NegativityStandard) neg[static_cast<int>(s.form)].second = s.max_deviation;
  }
  for (const auto& [form, devs] : neg) {
    if (!devs.first || !devs.second) continue;
    rep.conventions.push_back({static_cast<analytic::ClosedForm>(form),
                               *devs.first <= *devs.second ? MeasureKind::NegativityPaper
                                                           : MeasureKind::NegativityStandard,
                               *devs.first, *devs.second});
  }
  return rep;
}

inline std::string format_report(const DiscrepancyReport& rep, std::size_t max_items = 20) {
  std::ostringstream os;
  os << "numeric vs closed-form discrepancy report (flag threshold " << format_double(rep.flag_threshold) << ")\n";
  if (rep.formulas.empty()) os << "  no records carry a closed-form prediction\n";
  for (const auto& s : rep.formulas) {
    os << "  " << analytic::to_string(s.form) << " [" << to_string(s.pair) << ", " << to_string(s.measure)
       << "]: n=" << s.count << " max=" << format_double(s.max_deviation)
       << " mean=" << format_double(s.mean_deviation) << " worst at (alpha=" << format_double(s.worst_alpha)
       << ", gt=" << format_double(s.worst_gt) << ") -> " << (s.clean() ? "clean" : "FLAGGED") << '\n';
    for (std::size_t i = 0; i < s.flagged.size() && i < max_items; ++i) {
      const auto& f = s.flagged[i];
      os << "      alpha=" << format_double(f.alpha) << " gt=" << format_double(f.gt)
         << " numeric=" << format_double(f.numeric) << " analytic=" << format_double(f.analytic)
         << " dev=" << format_double(f.deviation) << '\n';
    }
    if (s.flagged.size() > max_items)
      os << "      ... " << s.flagged.size() - max_items << " more flagged points (see JSON report)\n";
  }
  for (const auto& c : rep.conventions) {
    os << "  convention for " << analytic::to_string(c.form) << ": " << to_string(c.best)
       << " matches better (max dev paper=" << format_double(c.paper_max_deviation)
       << ", standard=" << format_double(c.standard_max_deviation) << ")\n";
  }
  return os.str();
}

inline nlohmann::json report_json(const DiscrepancyReport& rep) {
  nlohmann::json j;
  j["flag_threshold"] = rep.flag_threshold;
  j["max_deviation"] = rep.max_deviation();
  j["flagged_count"] = rep.flagged_count();
  j["formulas"] = nlohmann::json::array();
  for (const auto& s : rep.formulas) {
    nlohmann::json f;
    f["closed_form"] = analytic::to_string(s.form);
    f["pair"] = to_string(s.pair);
    f["measure"] = to_string(s.measure);
    f["count"] = s.count;
    f["max_deviation"] = s.max_deviation;
    f["mean_deviation"] = s.mean_deviation;
    f["worst"] = {{"alpha", s.worst_alpha}, {"gt", s.worst_gt}};
    f["clean"] = s.clean();
    f["flagged"] = nlohmann::json::array();
    for (const auto& p : s.flagged)
      f["flagged"].push_back(
          {{"alpha", p.alpha}, {"gt", p.gt}, {"numeric", p.numeric}, {"analytic", p.analytic}, {"deviation", p.deviation}});
    j["formulas"].push_back(std::move(f));
  }
  j["conventions"] = nlohmann::json::array();
  for (const auto& c : rep.conventions)
    j["conventions"].push_back({{"closed_form", analytic::to_string(c.form)},
                                {"best", to_string(c.best)},
                                {"paper_max_deviation", c.paper_max_deviation},
                                {"standard_max_deviation", c.standard_max_deviation}});
  return j;
}

/// Maximal run [first, last] of grid indices on which a curve is zero.
struct ZeroInterval {
  std::size_t first;
  std::size_t last;
  bool bounded;  // live points exist on both sides

  std::size_t length() const { return last - first + 1; }
};

/// Maximal runs of values <= zero_tol. A run is bounded when a value
/// >= live_tol occurs both before and after it.
inline std::vector<ZeroInterval> zero_intervals(std::span<const double> values, double zero_tol = 1e-12,
                                                double live_tol = 1e-3) {
  std::vector<ZeroInterval> out;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n;) {
    if (values[i] > zero_tol) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && values[j + 1] <= zero_tol) ++j;
    const bool before = std::any_of(values.begin(), values.begin() + i, [&](double v) { return v >= live_tol; });
    const bool after = std::any_of(values.begin() + j + 1, values.end(), [&](double v) { return v >= live_tol; });
    out.push_back({i, j, before && after});
    i = j + 1;
  }
  return out;
}

/// True when the curve dies (exact zeros) and is later reborn.
inline bool has_death_and_birth(std::span<const double> values, double zero_tol = 1e-12, double live_tol = 1e-3) {
  const auto runs = zero_intervals(values, zero_tol, live_tol);
  return std::any_of(runs.begin(), runs.end(), [](const ZeroInterval& z) { return z.bounded; });
}

}  // namespace djc
