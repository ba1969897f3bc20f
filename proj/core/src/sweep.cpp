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

#include "petzlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "petzlab/channel_zoo.hpp"
#include "petzlab/errors.hpp"
#include "petzlab/petz.hpp"
#include "petzlab/qubit_geom.hpp"

namespace petzlab {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& text, std::string_view what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(std::string(what) + ": cannot parse '" + text +
                      "' as a number");
  }
  return value;
}

int parse_int(const std::string& text, std::string_view what) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(what) + ": cannot parse '" + text +
                      "' as an integer");
  }
  return value;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> metric_names(Experiment e) {
  switch (e) {
    case Experiment::distance_vs_p:
    case Experiment::distance_vs_d:
    case Experiment::appendix_grid:
      return {"distance"};
    case Experiment::volume_vs_p:
      return {"volume_channel", "volume_recovered"};
    case Experiment::nonunitality_vs_d:
      return {"nonunitality_channel", "nonunitality_recovered"};
    case Experiment::bloch_ellipsoids:
      return {"channel_axis_1",     "channel_axis_2",     "channel_axis_3",
              "channel_center_x",   "channel_center_y",   "channel_center_z",
              "recovered_axis_1",   "recovered_axis_2",   "recovered_axis_3",
              "recovered_center_x", "recovered_center_y", "recovered_center_z"};
  }
  return {};
}

KrausSet build_channel(ChannelKind kind, int dim, double p,
                       std::optional<double> p2) {
  switch (kind) {
    case ChannelKind::dephasing:
      return dephasing(dim, p);
    case ChannelKind::ad:
      return amplitude_damping(dim, p);
    case ChannelKind::ad_nonuniform: {
      std::vector<double> probs(static_cast<std::size_t>(dim) - 1,
                                p2.value_or(p));
      probs[0] = p;
      return amplitude_damping_nonuniform(probs);
    }
  }
  throw ConfigError("unknown channel");
}

struct GridPoint {
  int d;
  double p;
  std::optional<double> p2;
};

std::vector<double> evaluate_point(const SweepConfig& config,
                                   const GridPoint& pt) {
  const double eps = config.reference.epsilon_for(pt.d);
  const KrausSet channel = build_channel(config.channel, pt.d, pt.p, pt.p2);
  const PetzMap petz = petz_map(channel, reference_state(pt.d, eps));
  const KrausSet recovered = recovery_composition(petz);

  const double tp = recovered.tp_residual();
  if (!(tp <= config.tol)) {
    std::ostringstream os;
    os << "recovered map is not trace preserving (residual " << tp << ")";
    throw NumericError(os.str());
  }

  std::vector<double> values;
  switch (config.experiment) {
    case Experiment::distance_vs_p:
    case Experiment::distance_vs_d:
    case Experiment::appendix_grid:
      values = {choi_distance(recovered, identity_channel(pt.d))};
      break;
    case Experiment::volume_vs_p:
      values = {volume(channel), volume(recovered)};
      break;
    case Experiment::nonunitality_vs_d:
      values = {non_unitality(channel), non_unitality(recovered)};
      break;
    case Experiment::bloch_ellipsoids: {
      for (const KrausSet* map : {&channel, &recovered}) {
        const qubit::Ellipsoid e = qubit::accessible_ellipsoid(*map);
        values.insert(values.end(), {e.semi_axes[0], e.semi_axes[1],
                                     e.semi_axes[2], e.center.x, e.center.y,
                                     e.center.z});
      }
      break;
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw NumericError("non-finite metric value");
  }
  return values;
}

}  // namespace

double Reference::epsilon_for(int dim) const {
  return epsilon ? *epsilon : maximally_mixed_epsilon(dim);
}

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::distance_vs_p: return "distance_vs_p";
    case Experiment::distance_vs_d: return "distance_vs_d";
    case Experiment::volume_vs_p: return "volume_vs_p";
    case Experiment::nonunitality_vs_d: return "nonunitality_vs_d";
    case Experiment::bloch_ellipsoids: return "bloch_ellipsoids";
    case Experiment::appendix_grid: return "appendix_grid";
  }
  return "?";
}

std::string_view to_string(ChannelKind c) {
  switch (c) {
    case ChannelKind::dephasing: return "dephasing";
    case ChannelKind::ad: return "ad";
    case ChannelKind::ad_nonuniform: return "ad_nonuniform";
  }
  return "?";
}

Experiment parse_experiment(std::string_view text) {
  for (auto e : {Experiment::distance_vs_p, Experiment::distance_vs_d,
                 Experiment::volume_vs_p, Experiment::nonunitality_vs_d,
                 Experiment::bloch_ellipsoids, Experiment::appendix_grid}) {
    if (text == to_string(e)) return e;
  }
  throw ConfigError("unknown experiment '" + std::string(text) + "'");
}

ChannelKind parse_channel(std::string_view text) {
  for (auto c : {ChannelKind::dephasing, ChannelKind::ad,
                 ChannelKind::ad_nonuniform}) {
    if (text == to_string(c)) return c;
  }
  throw ConfigError("unknown channel '" + std::string(text) + "'");
}

Reference parse_reference(std::string_view text) {
  const std::string t = trim(text);
  if (t == "maximally-mixed" || t == "maximally_mixed") {
    return Reference::maximally_mixed();
  }
  if (t.rfind("eps=", 0) == 0) {
    const double eps = parse_double(t.substr(4), "reference");
    if (!(eps >= 0.0 && eps <= 1.0)) {
      throw ConfigError("reference: epsilon must lie in [0, 1]");
    }
    return Reference::literal(eps);
  }
  throw ConfigError("reference: expected 'maximally-mixed' or 'eps=<value>', "
                    "got '" + t + "'");
}

std::vector<double> parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  std::vector<double> out;
  if (parts.size() == 3) {
    const double start = parse_double(parts[0], "grid");
    const double stop = parse_double(parts[1], "grid");
    const double step = parse_double(parts[2], "grid");
    if (!(step > 0.0) || stop < start) {
      throw ConfigError("grid: expected start:stop:step with step > 0 and "
                        "stop >= start");
    }
    const auto n =
        static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    if (n > 1000000) throw ConfigError("grid: too many points");
    for (long long i = 0; i <= n; ++i) {
      out.push_back(start + static_cast<double>(i) * step);
    }
    if (std::abs(out.back() - stop) <= 1e-9 * std::max(1.0, std::abs(stop))) {
      out.back() = stop;
    }
    return out;
  }
  if (parts.size() != 1) {
    throw ConfigError("grid: expected start:stop:step or a comma list");
  }
  for (const auto& item : split(text, ',')) {
    out.push_back(parse_double(item, "grid"));
  }
  return out;
}

std::vector<int> parse_dims(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const int lo = parse_int(trim(item.substr(0, dash)), "dims");
      const int hi = parse_int(trim(item.substr(dash + 1)), "dims");
      if (hi < lo) throw ConfigError("dims: empty range '" + item + "'");
      for (int d = lo; d <= hi; ++d) out.push_back(d);
    } else {
      out.push_back(parse_int(item, "dims"));
    }
  }
  return out;
}

void validate(const SweepConfig& config) {
  if (config.dims.empty()) throw ConfigError("dims: empty");
  if (config.p_grid.empty()) throw ConfigError("p grid: empty");
  for (int d : config.dims) {
    if (d < 2) throw ConfigError("dims: every dimension must be >= 2");
    if (d > kHeavyDimension && !config.heavy) {
      throw ConfigError("dims: d = " + std::to_string(d) + " exceeds " +
                        std::to_string(kHeavyDimension) +
                        "; pass --heavy to run it");
    }
  }
  for (double p : config.p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("p grid: value " + format_number(p) +
                        " outside [0, 1]");
    }
  }
  if (config.reference.epsilon &&
      !(*config.reference.epsilon >= 0.0 && *config.reference.epsilon <= 1.0)) {
    throw ConfigError("reference: epsilon must lie in [0, 1]");
  }
  if (!(config.tol > 0.0)) throw ConfigError("tol: must be positive");
  if (config.threads < 1) throw ConfigError("threads: must be >= 1");

  const bool appendix = config.experiment == Experiment::appendix_grid;
  if (appendix != (config.channel == ChannelKind::ad_nonuniform)) {
    throw ConfigError(
        "channel: appendix_grid requires ad_nonuniform, and ad_nonuniform is "
        "only available in appendix_grid");
  }
  if (appendix) {
    for (int d : config.dims) {
      if (d < 3) throw ConfigError("appendix_grid: dimensions must be >= 3");
    }
  }
  if (config.experiment == Experiment::bloch_ellipsoids) {
    for (int d : config.dims) {
      if (d != 2) throw ConfigError("bloch_ellipsoids: qubits only (d = 2)");
    }
  }
}

std::vector<ResultRow> run_sweep(const SweepConfig& config) {
  validate(config);

  std::vector<int> dims = config.dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  std::vector<double> grid = config.p_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<GridPoint> points;
  const bool appendix = config.experiment == Experiment::appendix_grid;
  for (int d : dims) {
    for (double p : grid) {
      if (appendix) {
        for (double p2 : grid) points.push_back({d, p, p2});
      } else {
        points.push_back({d, p, std::nullopt});
      }
    }
  }

  std::vector<std::vector<double>> values(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        values[i] = evaluate_point(config, points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(
      std::min<std::size_t>(static_cast<std::size_t>(config.threads),
                            std::max<std::size_t>(points.size(), 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  const auto names = metric_names(config.experiment);
  std::vector<ResultRow> rows;
  rows.reserve(points.size() * names.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const GridPoint& pt = points[i];
    const double eps = config.reference.epsilon_for(pt.d);
    if (errors[i]) {
      std::ostringstream ctx;
      ctx << to_string(config.experiment) << " at d=" << pt.d
          << ", p=" << format_number(pt.p);
      if (pt.p2) ctx << ", p2=" << format_number(*pt.p2);
      ctx << ", epsilon=" << format_number(eps) << ": ";
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& e) {
        throw NumericError(ctx.str() + e.what());
      }
    }
    for (std::size_t m = 0; m < names.size(); ++m) {
      rows.push_back(ResultRow{config.experiment, config.channel, pt.d, pt.p,
                               pt.p2, eps, names[m], values[i][m]});
    }
  }
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.experiment) << ',' << to_string(r.channel) << ','
        << r.d << ',' << format_number(r.p) << ','
        << (r.p2 ? format_number(*r.p2) : std::string()) << ','
        << format_number(r.epsilon) << ',' << r.metric << ','
        << format_number(r.value) << '\n';
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& out_path) {
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  write_csv(rows, file);
  file.flush();
  if (!file) throw std::runtime_error("write to '" + out_path + "' failed");
}

std::vector<MetricReport> recovery_report(ChannelKind channel_kind, int dim,
                                          double p, const Reference& reference,
                                          std::optional<double> p2) {
  const double eps = reference.epsilon_for(dim);
  const KrausSet channel = build_channel(channel_kind, dim, p, p2);
  const PetzMap petz = petz_map(channel, reference_state(dim, eps));
  const KrausSet recovered = recovery_composition(petz);

  std::vector<std::pair<std::string, std::string>> params = {
      {"channel", std::string(to_string(channel_kind))},
      {"d", std::to_string(dim)},
      {"p", format_number(p)},
      {"epsilon", format_number(eps)}};
  if (p2) params.emplace_back("p2", format_number(*p2));

  std::vector<MetricReport> out;
  auto add = [&](std::string name, double value) {
    out.push_back(MetricReport{std::move(name), value, params});
  };
  add("distance", choi_distance(recovered, identity_channel(dim)));
  add("nonunitality_channel", non_unitality(channel));
  add("nonunitality_recovered", non_unitality(recovered));
  add("tp_residual_recovered", recovered.tp_residual());
  if (dim == 2) {
    add("volume_channel", volume(channel));
    add("volume_recovered", volume(recovered));
  }
  return out;
}

}  // namespace petzlab
