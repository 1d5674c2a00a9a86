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

// djc: sweeps, numeric-vs-closed-form comparison, figure presets and the
// propagator benchmark for the double Jaynes-Cummings model.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 deviation above
// fail_threshold.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "djc/bench.hpp"
#include "djc/config.hpp"
#include "djc/report.hpp"
#include "djc/sweep.hpp"
#include "presets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDeviation = 2;

void add_overrides(CLI::App* cmd, std::map<std::string, std::string>& overrides) {
  for (auto key : djc::kConfigKeys) {
    const std::string k(key);
    cmd->add_option_function<std::string>(
        "--" + k, [&overrides, k](const std::string& v) { overrides[k] = v; },
        "override config key '" + k + "'");
  }
}

djc::ScenarioConfig load(const std::string& path, const std::map<std::string, std::string>& overrides) {
  try {
    return djc::parse_config(djc::read_text_file(path), overrides);
  } catch (const djc::ConfigError& e) {
    throw djc::ConfigError(path + ": " + e.what());
  }
}

std::vector<djc::SeriesRecord> sweep_and_write(const djc::ScenarioConfig& cfg) {
  auto records = djc::run_sweep(cfg);
  if (cfg.output_path.empty()) {
    djc::write_csv(std::cout, records, djc::describe(cfg));
  } else {
    djc::write_csv_file(cfg.output_path, cfg, records);
    std::cerr << "wrote " << records.size() << " records to " << cfg.output_path << '\n';
  }
  return records;
}

int compare(const djc::ScenarioConfig& cfg, const std::string& report_path) {
  const auto records = sweep_and_write(cfg);
  const auto rep = djc::report_discrepancies(records, cfg.flag_threshold);
  (cfg.output_path.empty() ? std::cerr : std::cout) << djc::format_report(rep);
  std::string json_path = report_path;
  if (json_path.empty() && !cfg.output_path.empty()) json_path = cfg.output_path + ".report.json";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw djc::IoError("cannot write '" + json_path + "'");
    out << djc::report_json(rep).dump(2) << '\n';
  }
  if (cfg.fail_threshold && rep.max_deviation() > *cfg.fail_threshold) {
    std::cerr << "max deviation " << djc::format_double(rep.max_deviation()) << " exceeds fail_threshold "
              << djc::format_double(*cfg.fail_threshold) << '\n';
    return kExitDeviation;
  }
  return kExitOk;
}

int run_preset(const std::string& figure, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  int status = kExitOk;
  for (const auto& file : djc::preset_files(figure)) {
    auto cfg = djc::parse_config(file.text);
    cfg.output_path = (fs::path(out_dir) / cfg.output_path).string();
    const auto t0 = std::chrono::steady_clock::now();
    std::cout << "== " << file.name << '\n';
    status = std::max(status, compare(cfg, ""));
    std::cout << "   (" << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s)\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Jaynes-Cummings entanglement simulator"};
  app.require_subcommand(1);

  std::map<std::string, std::string> overrides;
  std::string config_path;
  std::string report_path;

  auto* sweep = app.add_subcommand("sweep", "Run a (alpha, gt) sweep and write CSV");
  sweep->add_option("config", config_path, "key=value config file")->required()->check(CLI::ExistingFile);
  add_overrides(sweep, overrides);

  auto* cmp = app.add_subcommand("compare", "Sweep and report numeric vs closed-form deviations");
  cmp->add_option("config", config_path, "key=value config file")->required()->check(CLI::ExistingFile);
  cmp->add_option("--report", report_path, "JSON report path (default <output>.report.json)");
  add_overrides(cmp, overrides);

  djc::BenchConfig bench_cfg;
  std::string bench_out = "bench.csv";
  auto* bench = app.add_subcommand("bench", "Time cached spectral propagation against scaling and squaring");
  bench->add_option("--calls", bench_cfg.calls, "evolve calls per strategy")->capture_default_str();
  bench->add_option("--n_max", bench_cfg.params.n_max, "Fock truncation")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output path")->capture_default_str();

  std::string figure;
  std::string out_dir = ".";
  bool list_only = false;
  auto* preset = app.add_subcommand("preset", "Reproduce the data behind one figure (fig2 .. fig8)");
  preset->add_option("figure", figure, "figure name")->check(CLI::IsMember(djc::kFigureNames));
  preset->add_option("--out-dir", out_dir, "directory for CSV and report files")->capture_default_str();
  preset->add_flag("--print", list_only, "print the preset config files instead of running them");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      sweep_and_write(load(config_path, overrides));
      return kExitOk;
    }
    if (*cmp) return compare(load(config_path, overrides), report_path);
    if (*bench) {
      const auto result = djc::bench_propagator(bench_cfg);
      djc::write_bench_csv(std::cout, result);
      std::ofstream out(bench_out);
      if (!out) throw djc::IoError("cannot write '" + bench_out + "'");
      djc::write_bench_csv(out, result);
      const double speedup = result.scaling_squaring().seconds_per_call / result.spectral().seconds_per_call;
      std::cout << "cached spectral is " << speedup << "x faster per call\n";
      return kExitOk;
    }
    if (*preset) {
      if (figure.empty()) {
        for (auto f : djc::kFigureNames) std::cout << f << '\n';
        return kExitOk;
      }
      if (list_only) {
        for (const auto& f : djc::preset_files(figure)) std::cout << "### " << f.name << ".cfg\n" << f.text;
        return kExitOk;
      }
      return run_preset(figure, out_dir);
    }
  } catch (const djc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const djc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const djc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
