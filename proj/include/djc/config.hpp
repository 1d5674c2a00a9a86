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

// Flat key=value scenario configuration. Blank lines and text after '#' are
// ignored. Angles and time grids accept decimals or multiples of pi
// ("pi/4", "3pi/4", "-2*pi", "0.5").

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "djc/errors.hpp"
#include "djc/measures.hpp"
#include "djc/model.hpp"

namespace djc {

/// Either a single value or an inclusive linear grid of `count` points.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  static Grid single(double v) { return {v, v, 1}; }

  std::vector<double> values() const {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
      out[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
  }
};

enum class Pair { AB, ab, Aa, Ab };

inline constexpr std::array kAllPairs{Pair::AB, Pair::ab, Pair::Aa, Pair::Ab};

inline std::string_view to_string(Pair p) {
  switch (p) {
    case Pair::AB: return "AB";
    case Pair::ab: return "ab";
    case Pair::Aa: return "Aa";
    case Pair::Ab: return "Ab";
  }
  return "?";
}

inline std::optional<Pair> parse_pair(std::string_view s) {
  for (auto p : kAllPairs)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

inline std::array<std::size_t, 2> subsystems(Pair p) {
  switch (p) {
    case Pair::AB: return {kAtomA, kAtomB};
    case Pair::ab: return {kModeA, kModeB};
    case Pair::Aa: return {kAtomA, kModeA};
    case Pair::Ab: return {kAtomA, kModeB};
  }
  return {0, 1};
}

struct ScenarioConfig {
  Scenario scenario = Scenario::Ground;
  Grid alpha = Grid::single(std::numbers::pi / 4);
  ModelParams params;
  Grid t_grid{0.0, std::numbers::pi, 50};  // in units of gt
  std::optional<int> zeno_n;
  std::vector<Pair> pairs{Pair::AB};
  std::vector<MeasureKind> measures{MeasureKind::ConcurrenceX};
  std::string output_path;
  std::optional<double> fail_threshold;  // exit code 2 above this deviation
  double flag_threshold = 1e-6;          // discrepancy report flagging level
  unsigned threads = 0;                  // 0 = hardware concurrency
};

inline constexpr std::array<std::string_view, 14> kConfigKeys{
    "scenario", "alpha",  "g",      "omega",          "nu",             "n_max", "t_grid",
    "zeno_n",   "pairs", "measures", "output", "fail_threshold", "flag_threshold", "threads"};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses "1.25", "pi", "-pi/2", "3pi/4", "3*pi/4", "2*pi".
inline std::optional<double> parse_angle(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) return std::nullopt;
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return detail::parse_number(s);

  std::string_view coeff = detail::trim(s.substr(0, pi_pos));
  std::string_view rest = detail::trim(s.substr(pi_pos + 2));
  if (!coeff.empty() && coeff.back() == '*') coeff = detail::trim(coeff.substr(0, coeff.size() - 1));
  double factor = 1.0;
  if (coeff == "-") {
    factor = -1.0;
  } else if (coeff == "+") {
    factor = 1.0;
  } else if (!coeff.empty()) {
    const auto c = detail::parse_number(coeff);
    if (!c) return std::nullopt;
    factor = *c;
  }
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    const auto d = detail::parse_number(detail::trim(rest.substr(1)));
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return factor * std::numbers::pi / divisor;
}

/// Parses a single angle or "start, stop, count".
inline std::optional<Grid> parse_grid(std::string_view text) {
  const auto parts = detail::split(text, ',');
  if (parts.size() == 1) {
    const auto v = parse_angle(parts[0]);
    if (!v) return std::nullopt;
    return Grid::single(*v);
  }
  if (parts.size() != 3) return std::nullopt;
  const auto a = parse_angle(parts[0]);
  const auto b = parse_angle(parts[1]);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (!a || !b || ec != std::errc{} || ptr != parts[2].data() + parts[2].size()) return std::nullopt;
  return Grid{*a, *b, n};
}

/// Ordered key -> (value, source line). Later assignments override earlier ones.
using ConfigEntries = std::map<std::string, std::pair<std::string, int>, std::less<>>;

inline ConfigEntries read_entries(std::string_view text) {
  ConfigEntries entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value, got '" + std::string(line) + "'");
    const std::string key(detail::trim(line.substr(0, eq)));
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    entries[key] = {std::string(detail::trim(line.substr(eq + 1))), line_no};
  }
  return entries;
}

namespace detail {

[[noreturn]] inline void field_error(const std::string& key, int line, const std::string& what) {
  const std::string where = line > 0    ? "line " + std::to_string(line)
                            : line == 0 ? std::string("command line")
                                        : std::string("config");
  throw ConfigError(where + ": field '" + key + "': " + what);
}

}  // namespace detail

/// Builds a validated config. `line` 0 in an entry marks a command-line override.
inline ScenarioConfig build_config(const ConfigEntries& entries) {
  ScenarioConfig cfg;
  for (const auto& [key, entry] : entries) {
    const auto& [value, line] = entry;
    const auto fail = [&](const std::string& what) { detail::field_error(key, line, what); };
    const auto number = [&]() {
      const auto v = parse_angle(value);
      if (!v) fail("not a number: '" + value + "'");
      return *v;
    };
    const auto integer = [&]() {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size()) fail("not an integer: '" + value + "'");
      return v;
    };
    if (key == "scenario") {
      if (value == "ground") cfg.scenario = Scenario::Ground;
      else if (value == "excited") cfg.scenario = Scenario::Excited;
      else fail("expected ground or excited, got '" + value + "'");
    } else if (key == "alpha" || key == "t_grid") {
      const auto grid = parse_grid(value);
      if (!grid) fail("expected a value or 'start, stop, count', got '" + value + "'");
      if (grid->count < 1 || (grid->count < 2 && grid->start != grid->stop)) fail("grid count must be at least 2");
      if (key == "alpha") cfg.alpha = *grid;
      else cfg.t_grid = *grid;
    } else if (key == "g") {
      cfg.params.g = number();
    } else if (key == "omega") {
      cfg.params.omega = number();
    } else if (key == "nu") {
      cfg.params.nu = number();
    } else if (key == "n_max") {
      cfg.params.n_max = static_cast<int>(integer());
    } else if (key == "zeno_n") {
      if (value == "none" || value.empty()) cfg.zeno_n.reset();
      else cfg.zeno_n = static_cast<int>(integer());
    } else if (key == "pairs") {
      cfg.pairs.clear();
      for (auto tok : detail::split(value, ',')) {
        const auto p = parse_pair(tok);
        if (!p) fail("unknown pair '" + std::string(tok) + "' (expected AB, ab, Aa, Ab)");
        cfg.pairs.push_back(*p);
      }
    } else if (key == "measures") {
      cfg.measures.clear();
      for (auto tok : detail::split(value, ',')) {
        const auto m = parse_measure(tok);
        if (!m) fail("unknown measure '" + std::string(tok) + "'");
        cfg.measures.push_back(*m);
      }
    } else if (key == "output") {
      cfg.output_path = value;
    } else if (key == "fail_threshold") {
      if (value == "off" || value.empty()) cfg.fail_threshold.reset();
      else cfg.fail_threshold = number();
    } else if (key == "flag_threshold") {
      cfg.flag_threshold = number();
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(integer());
    }
  }

  const auto line_of = [&](std::string_view k) {
    const auto it = entries.find(k);
    return it == entries.end() ? -1 : it->second.second;
  };
  if (cfg.t_grid.start < 0.0) detail::field_error("t_grid", line_of("t_grid"), "start must be >= 0");
  if (cfg.zeno_n && *cfg.zeno_n < 1) detail::field_error("zeno_n", line_of("zeno_n"), "must be at least 1");
  if (cfg.pairs.empty()) detail::field_error("pairs", line_of("pairs"), "at least one pair required");
  if (cfg.measures.empty()) detail::field_error("measures", line_of("measures"), "at least one measure required");
  try {
    cfg.params.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("model parameters: ") + e.what());
  }
  return cfg;
}

inline ScenarioConfig parse_config(std::string_view text, const std::map<std::string, std::string>& overrides = {}) {
  ConfigEntries entries = read_entries(text);
  for (const auto& [k, v] : overrides) {
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), k) == kConfigKeys.end())
      throw ConfigError("command line: unknown key '" + k + "'");
    entries[k] = {v, 0};
  }
  return build_config(entries);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace djc
