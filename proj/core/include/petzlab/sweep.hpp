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

#pragma once

// Configuration-driven parameter sweeps over (d, p, eps) grids and their CSV
// serialization.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "petzlab/metrics.hpp"

namespace petzlab {

/// Invalid sweep configuration (maps to CLI exit code 1).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Experiment {
  distance_vs_p,
  distance_vs_d,
  volume_vs_p,
  nonunitality_vs_d,
  bloch_ellipsoids,
  appendix_grid,
};

enum class ChannelKind { dephasing, ad, ad_nonuniform };

/// Reference state selector: maximally mixed sigma(1 - 1/d), or a literal
/// epsilon shared by every dimension.
struct Reference {
  std::optional<double> epsilon;  // empty = maximally mixed

  static Reference maximally_mixed() { return {}; }
  static Reference literal(double eps) { return {eps}; }
  double epsilon_for(int dim) const;
};

struct SweepConfig {
  Experiment experiment = Experiment::distance_vs_p;
  ChannelKind channel = ChannelKind::dephasing;
  std::vector<int> dims;
  std::vector<double> p_grid;
  Reference reference;
  std::string out_path;
  bool heavy = false;
  double tol = 1e-9;
  int threads = 1;
};

struct ResultRow {
  Experiment experiment;
  ChannelKind channel;
  int d;
  double p;
  std::optional<double> p2;  // appendix_grid only
  double epsilon;
  std::string metric;
  double value;
};

/// Dimensions above this need SweepConfig::heavy.
inline constexpr int kHeavyDimension = 40;

std::string_view to_string(Experiment e);
std::string_view to_string(ChannelKind c);
Experiment parse_experiment(std::string_view text);
ChannelKind parse_channel(std::string_view text);
/// "maximally-mixed" (or "maximally_mixed") | "eps=<value>".
Reference parse_reference(std::string_view text);
/// "start:stop:step" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);
/// Comma-separated integers, or "lo-hi" ranges mixed in.
std::vector<int> parse_dims(std::string_view text);

/// Throws ConfigError describing the first invalid field.
void validate(const SweepConfig& config);

/// Evaluates every grid point. Rows are ordered by (d, p, p2, metric
/// position) independent of `config.threads`. Numeric failures at a grid
/// point abort the sweep with a NumericError naming the point.
std::vector<ResultRow> run_sweep(const SweepConfig& config);

inline constexpr std::string_view kCsvHeader =
    "experiment,channel,d,p,p2,epsilon,metric,value";

/// Header plus one line per row, 12 significant digits, LF endings.
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);

/// write_csv to a file; throws std::runtime_error on I/O failure.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& out_path);

/// Single-point summary: distance of P o L to the identity, non-unitality
/// of L and of P o L, and (for qubits) accessible volumes.
std::vector<MetricReport> recovery_report(ChannelKind channel, int dim,
                                          double p, const Reference& reference,
                                          std::optional<double> p2 = {});

}  // namespace petzlab
