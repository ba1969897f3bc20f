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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "petzlab/errors.hpp"
#include "petzlab/sweep.hpp"

using namespace petzlab;
using Catch::Matchers::WithinAbs;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.experiment = Experiment::distance_vs_p;
  c.channel = ChannelKind::ad;
  c.dims = {3, 2};
  c.p_grid = {0.5, 0.0, 0.25, 0.5};
  return c;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  write_csv(rows, os);
  return os.str();
}

}  // namespace

TEST_CASE("parse names", "[sweep]") {
  for (auto e : {Experiment::distance_vs_p, Experiment::distance_vs_d,
                 Experiment::volume_vs_p, Experiment::nonunitality_vs_d,
                 Experiment::bloch_ellipsoids, Experiment::appendix_grid}) {
    CHECK(parse_experiment(to_string(e)) == e);
  }
  CHECK(parse_channel("ad_nonuniform") == ChannelKind::ad_nonuniform);
  CHECK_THROWS_AS(parse_experiment("distance"), ConfigError);
  CHECK_THROWS_AS(parse_channel("depolarizing"), ConfigError);
}

TEST_CASE("parse reference", "[sweep]") {
  CHECK_FALSE(parse_reference("maximally-mixed").epsilon.has_value());
  CHECK_FALSE(parse_reference("maximally_mixed").epsilon.has_value());
  CHECK(parse_reference("eps=0.01").epsilon == 0.01);
  CHECK_THAT(parse_reference("maximally-mixed").epsilon_for(10),
             WithinAbs(0.9, 1e-15));
  CHECK(parse_reference("eps=0.3").epsilon_for(10) == 0.3);
  CHECK_THROWS_AS(parse_reference("eps=1.5"), ConfigError);
  CHECK_THROWS_AS(parse_reference("eps=abc"), ConfigError);
  CHECK_THROWS_AS(parse_reference("pure"), ConfigError);
}

TEST_CASE("parse grids and dims", "[sweep]") {
  const auto grid = parse_grid("0:1:0.02");
  REQUIRE(grid.size() == 51);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK_THAT(grid[25], WithinAbs(0.5, 1e-15));
  CHECK(parse_grid("0:1:0.1").size() == 11);
  CHECK(parse_grid("0.3, 0.1,0.2") == std::vector<double>{0.3, 0.1, 0.2});
  CHECK(parse_grid("0.5") == std::vector<double>{0.5});
  CHECK_THROWS_AS(parse_grid("0:1:0"), ConfigError);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0:1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0.1,x"), ConfigError);

  CHECK(parse_dims("2,10,40") == std::vector<int>{2, 10, 40});
  CHECK(parse_dims("2-5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_dims("2-3, 8") == std::vector<int>{2, 3, 8});
  CHECK_THROWS_AS(parse_dims("5-2"), ConfigError);
  CHECK_THROWS_AS(parse_dims("two"), ConfigError);
}

TEST_CASE("validate", "[sweep]") {
  CHECK_NOTHROW(validate(small_config()));

  auto broken = [](auto mutate) {
    SweepConfig c = small_config();
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.dims.clear(); })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.p_grid.clear(); })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.dims = {1}; })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.p_grid = {1.2}; })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.tol = 0.0; })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.threads = 0; })),
                  ConfigError);
  CHECK_THROWS_AS(
      validate(broken([](SweepConfig& c) { c.reference = Reference::literal(-1); })),
      ConfigError);

  // heavy dimensions need an explicit opt-in
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) { c.dims = {60}; })),
                  ConfigError);
  CHECK_NOTHROW(validate(broken([](SweepConfig& c) {
    c.dims = {60};
    c.heavy = true;
  })));
  CHECK_NOTHROW(validate(broken([](SweepConfig& c) { c.dims = {40}; })));

  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) {
                    c.channel = ChannelKind::ad_nonuniform;
                  })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) {
                    c.experiment = Experiment::appendix_grid;
                  })),
                  ConfigError);
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) {
                    c.experiment = Experiment::appendix_grid;
                    c.channel = ChannelKind::ad_nonuniform;
                  })),
                  ConfigError);  // d = 2 is below the appendix minimum
  CHECK_THROWS_AS(validate(broken([](SweepConfig& c) {
                    c.experiment = Experiment::bloch_ellipsoids;
                  })),
                  ConfigError);
}

TEST_CASE("run_sweep ordering and values", "[sweep]") {
  const auto rows = run_sweep(small_config());
  REQUIRE(rows.size() == 6);
  const std::vector<std::pair<int, double>> expected = {
      {2, 0.0}, {2, 0.25}, {2, 0.5}, {3, 0.0}, {3, 0.25}, {3, 0.5}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].d == expected[i].first);
    CHECK(rows[i].p == expected[i].second);
    CHECK(rows[i].metric == "distance");
    CHECK_FALSE(rows[i].p2.has_value());
    CHECK_THAT(rows[i].epsilon, WithinAbs(1.0 - 1.0 / rows[i].d, 1e-15));
  }
  CHECK(rows[0].value < 1e-12);  // p = 0 recovers perfectly
  CHECK(rows[2].value > rows[1].value);
}

TEST_CASE("dephasing sweep matches closed form", "[sweep]") {
  SweepConfig c;
  c.experiment = Experiment::distance_vs_d;
  c.channel = ChannelKind::dephasing;
  c.dims = parse_dims("2-6");
  c.p_grid = {0.4, 1.0};
  for (const auto& row : run_sweep(c)) {
    const double q = 1.0 - (1.0 - row.p) * (1.0 - row.p);
    CHECK_THAT(row.value, WithinAbs(2.0 * q * (row.d - 1) / row.d, 1e-9));
  }
}

TEST_CASE("experiment metric sets", "[sweep]") {
  SweepConfig c;
  c.channel = ChannelKind::ad;
  c.dims = {2};
  c.p_grid = {0.3};
  c.reference = Reference::literal(0.01);

  c.experiment = Experiment::volume_vs_p;
  auto rows = run_sweep(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].metric == "volume_channel");
  CHECK_THAT(rows[0].value, WithinAbs(0.49, 1e-12));
  CHECK(rows[1].metric == "volume_recovered");

  c.experiment = Experiment::nonunitality_vs_d;
  rows = run_sweep(c);
  REQUIRE(rows.size() == 2);
  CHECK_THAT(rows[0].value, WithinAbs(0.15, 1e-12));

  c.experiment = Experiment::bloch_ellipsoids;
  rows = run_sweep(c);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].metric == "channel_axis_1");
  CHECK(rows[11].metric == "recovered_center_z");
  CHECK_THAT(rows[5].value, WithinAbs(0.3, 1e-12));

  c.experiment = Experiment::appendix_grid;
  c.channel = ChannelKind::ad_nonuniform;
  c.dims = {3};
  c.p_grid = {0.0, 0.5};
  rows = run_sweep(c);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].p == 0.0);
  CHECK(rows[1].p2 == 0.5);
  CHECK(rows[0].value < 1e-12);
}

TEST_CASE("parallel sweep is identical to serial", "[sweep]") {
  SweepConfig c = small_config();
  c.dims = {2, 3, 4};
  c.p_grid = parse_grid("0:1:0.1");
  const std::string serial = to_csv(run_sweep(c));
  c.threads = 4;
  CHECK(to_csv(run_sweep(c)) == serial);
  CHECK(to_csv(run_sweep(c)) == serial);
}

TEST_CASE("numeric failures carry the grid point", "[sweep]") {
  SweepConfig c = small_config();
  c.reference = Reference::literal(0.0);
  c.p_grid = {0.5};
  try {
    run_sweep(c);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    const std::string what = e.what();
    CHECK(what.find("d=2") != std::string::npos);
    CHECK(what.find("p=0.5") != std::string::npos);
    CHECK(what.find("trace preserving") != std::string::npos);
  }
}

TEST_CASE("csv output", "[sweep]") {
  CHECK(to_csv({}) == std::string(kCsvHeader) + "\n");

  const std::vector<ResultRow> rows = {
      {Experiment::appendix_grid, ChannelKind::ad_nonuniform, 3, 0.1, 0.2,
       0.01, "distance", 1.0 / 3.0},
      {Experiment::distance_vs_p, ChannelKind::ad, 2, 0.5, std::nullopt, 0.5,
       "distance", 0.25}};
  CHECK(to_csv(rows) ==
        "experiment,channel,d,p,p2,epsilon,metric,value\n"
        "appendix_grid,ad_nonuniform,3,0.1,0.2,0.01,distance,0.333333333333\n"
        "distance_vs_p,ad,2,0.5,,0.5,distance,0.25\n");

  const auto path =
      std::filesystem::temp_directory_path() / "petzlab_test_sweep.csv";
  emit_csv(rows, path.string());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == to_csv(rows));
  std::filesystem::remove(path);

  CHECK_THROWS(emit_csv(rows, "/nonexistent-dir/out.csv"));
}

TEST_CASE("recovery report", "[sweep]") {
  const auto report =
      recovery_report(ChannelKind::ad, 2, 0.3, Reference::literal(0.01));
  REQUIRE(report.size() == 6);
  CHECK(report[0].name == "distance");
  CHECK(report[1].name == "nonunitality_channel");
  CHECK_THAT(report[1].value, WithinAbs(0.15, 1e-12));
  CHECK(report[3].value < 1e-12);
  CHECK(report[4].name == "volume_channel");
  CHECK_THAT(report[4].value, WithinAbs(0.49, 1e-12));
  CHECK(recovery_report(ChannelKind::dephasing, 3, 0.3,
                        Reference::maximally_mixed())
            .size() == 4);
}
