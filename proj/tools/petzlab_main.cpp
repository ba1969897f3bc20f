// Copyright 2026 The petzlab Authors
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

// petzlab command-line driver.
//
//   petzlab sweep --experiment <id> --channel <id> --dims 2,10,40
//                 --p 0:1:0.02 --reference maximally-mixed|eps=0.01
//                 --out results.csv [--heavy] [--tol 1e-9] [--threads N]
//   petzlab point --channel ad --d 2 --p 0.3 --reference eps=0.01
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "petzlab/errors.hpp"
#include "petzlab/sweep.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

std::string default_dims(petzlab::Experiment e) {
  switch (e) {
    case petzlab::Experiment::bloch_ellipsoids:
    case petzlab::Experiment::volume_vs_p:
      return "2";
    case petzlab::Experiment::appendix_grid:
      return "3";
    default:
      return "2-20";
  }
}

std::string default_grid(petzlab::Experiment e) {
  return e == petzlab::Experiment::appendix_grid ? "0:1:0.1" : "0:1:0.02";
}

int threads_from_env(int fallback) {
  const char* env = std::getenv("PETZLAB_THREADS");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const int n = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw petzlab::ConfigError(std::string("PETZLAB_THREADS: not an integer: ") +
                               env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petz recovery map experiments"};
  app.require_subcommand(1);

  std::string experiment, channel, dims, grid, reference = "maximally-mixed";
  std::string out_path;
  bool heavy = false;
  double tol = 1e-9;
  int threads = 1;

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep to CSV");
  sweep->add_option("--experiment", experiment,
                    "distance_vs_p | distance_vs_d | volume_vs_p | "
                    "nonunitality_vs_d | bloch_ellipsoids | appendix_grid")
      ->required();
  sweep->add_option("--channel", channel, "dephasing | ad | ad_nonuniform")
      ->required();
  sweep->add_option("--dims", dims, "Dimensions, e.g. 2,10,40 or 2-20");
  sweep->add_option("--p", grid, "Noise grid start:stop:step or a list");
  sweep->add_option("--reference", reference,
                    "maximally-mixed | eps=<value>");
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_flag("--heavy", heavy, "Allow d > 40");
  sweep->add_option("--tol", tol, "Trace-preservation tolerance");
  sweep->add_option("--threads", threads,
                    "Worker threads (PETZLAB_THREADS overrides)");

  int point_d = 2;
  double point_p = 0.0;
  std::optional<double> point_p2;
  auto* point = app.add_subcommand("point", "Print metrics for one setting");
  point->add_option("--channel", channel, "dephasing | ad | ad_nonuniform")
      ->required();
  point->add_option("--d", point_d, "Dimension")->required();
  point->add_option("--p", point_p, "Noise strength (p1 for ad_nonuniform)")
      ->required();
  point->add_option("--p2", point_p2, "Second decay probability");
  point->add_option("--reference", reference, "maximally-mixed | eps=<value>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sweep) {
      petzlab::SweepConfig config;
      config.experiment = petzlab::parse_experiment(experiment);
      config.channel = petzlab::parse_channel(channel);
      config.dims = petzlab::parse_dims(
          dims.empty() ? default_dims(config.experiment) : dims);
      config.p_grid = petzlab::parse_grid(
          grid.empty() ? default_grid(config.experiment) : grid);
      config.reference = petzlab::parse_reference(reference);
      config.out_path = out_path;
      config.heavy = heavy;
      config.tol = tol;
      config.threads = threads_from_env(threads);
      petzlab::validate(config);
      const auto rows = petzlab::run_sweep(config);
      petzlab::emit_csv(rows, config.out_path);
      std::cerr << "wrote " << rows.size() << " rows to " << config.out_path
                << "\n";
    } else if (*point) {
      const auto kind = petzlab::parse_channel(channel);
      if (kind == petzlab::ChannelKind::ad_nonuniform && point_d < 3) {
        throw petzlab::ConfigError("ad_nonuniform needs --d >= 3");
      }
      if (!(point_p >= 0.0 && point_p <= 1.0) ||
          (point_p2 && !(*point_p2 >= 0.0 && *point_p2 <= 1.0))) {
        throw petzlab::ConfigError("noise strengths must lie in [0, 1]");
      }
      if (point_d < 2) throw petzlab::ConfigError("--d must be >= 2");
      const auto reports = petzlab::recovery_report(
          kind, point_d, point_p, petzlab::parse_reference(reference),
          point_p2);
      for (const auto& r : reports) {
        std::printf("%-24s %.12g\n", r.name.c_str(), r.value);
      }
    }
  } catch (const petzlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const petzlab::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    // unwritable --out path and similar setup problems
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
