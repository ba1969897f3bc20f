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

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "petzlab/channel.hpp"
#include "petzlab/channel_zoo.hpp"
#include "petzlab/errors.hpp"
#include "petzlab/metrics.hpp"
#include "petzlab/petz.hpp"

using namespace petzlab;
using Catch::Matchers::WithinAbs;

namespace {

double oracle_choi_distance(const KrausSet& a, const KrausSet& b) {
  const double d = a.dim();
  return oracle::trace_norm((oracle::choi(a.operators()) -
                             oracle::choi(b.operators())) /
                            d);
}

}  // namespace

TEST_CASE("choi distance examples", "[metrics]") {
  CHECK(choi_distance(dephasing(3, 0.4), dephasing(3, 0.4)) < 1e-14);
  CHECK_THAT(choi_distance(identity_channel(2), dephasing(2, 1.0)),
             WithinAbs(1.0, 1e-14));

  // identity vs dephasing(q): (q/d)(J - I) on the span of |ii>
  for (int d : {2, 3, 7, 20}) {
    for (double q : {0.1, 0.64, 1.0}) {
      CHECK_THAT(choi_distance(identity_channel(d), dephasing(d, q)),
                 WithinAbs(2.0 * q * (d - 1) / d, 1e-10));
    }
  }
  // full damping vs identity on a qubit, against the SVD oracle
  CHECK_THAT(choi_distance(identity_channel(2), amplitude_damping(2, 1.0)),
             WithinAbs(oracle_choi_distance(identity_channel(2),
                                            amplitude_damping(2, 1.0)),
                       1e-12));
  CHECK_THROWS_AS(choi_distance(identity_channel(2), identity_channel(3)),
                  ShapeError);
}

TEST_CASE("choi distance properties", "[metrics][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 4;
    const KrausSet a(d, oracle::channel(rng, d, 1 + trial % 3));
    const KrausSet b(d, oracle::channel(rng, d, 2));
    const KrausSet c(d, oracle::channel(rng, d, 3));
    const double ab = choi_distance(a, b);
    CHECK_THAT(ab, WithinAbs(oracle_choi_distance(a, b), 1e-10));
    CHECK_THAT(ab, WithinAbs(choi_distance(b, a), 1e-12));
    CHECK(ab <= 2.0 + 1e-12);
    CHECK(ab <= choi_distance(a, c) + choi_distance(c, b) + 1e-10);
  }
}

TEST_CASE("petz recovery distance for dephasing", "[metrics]") {
  // P o L for dephasing is dephasing with q = 1 - (1 - p)^2
  for (int d : {2, 5, 12}) {
    for (double p : {0.0, 0.3, 0.75, 1.0}) {
      const KrausSet ch = dephasing(d, p);
      const PetzMap petz = petz_map(ch, DensityMatrix::maximally_mixed(d));
      const double q = 1.0 - (1.0 - p) * (1.0 - p);
      CHECK_THAT(choi_distance(recovery_composition(petz), identity_channel(d)),
                 WithinAbs(2.0 * q * (d - 1) / d, 1e-9));
    }
  }
}

TEST_CASE("non-unitality", "[metrics]") {
  for (int d : {2, 3, 6}) {
    CHECK(non_unitality(dephasing(d, 0.7)) < 1e-14);
    CHECK(non_unitality(identity_channel(d)) < 1e-14);
    for (double p : {0.1, 0.5, 1.0}) {
      CHECK_THAT(non_unitality(amplitude_damping(d, p)),
                 WithinAbs((d - 1) * p / d, 1e-12));
    }
  }
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 3;
    const KrausSet ch(d, oracle::channel(rng, d, 2));
    const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / double(d);
    const double expected =
        0.5 * oracle::trace_norm(oracle::apply(ch.operators(), mixed) - mixed);
    CHECK_THAT(non_unitality(ch), WithinAbs(expected, 1e-10));
    CHECK(non_unitality(ch) <= 1.0);
  }
}

TEST_CASE("volume", "[metrics]") {
  for (double p : {0.0, 0.2, 0.6, 1.0}) {
    CHECK_THAT(volume(dephasing(2, p)), WithinAbs((1 - p) * (1 - p), 1e-14));
    CHECK_THAT(volume(amplitude_damping(2, p)),
               WithinAbs((1 - p) * (1 - p), 1e-14));
  }
  CHECK_THAT(volume(identity_channel(3)), WithinAbs(1.0, 1e-13));
  // volume is multiplicative under composition
  std::mt19937_64 rng(43);
  const KrausSet a(2, oracle::channel(rng, 2, 2));
  const KrausSet b(2, oracle::channel(rng, 2, 3));
  CHECK_THAT(volume(compose(a, b)), WithinAbs(volume(a) * volume(b), 1e-12));
}

TEST_CASE("relative entropy", "[metrics]") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
  CHECK_THAT(relative_entropy(DensityMatrix::basis_state(4, 1), mixed),
             WithinAbs(std::log(4.0), 1e-14));
  CHECK_THAT(relative_entropy(mixed, mixed), WithinAbs(0.0, 1e-14));
  CHECK(std::isinf(relative_entropy(mixed, DensityMatrix::basis_state(4, 0))));
  CHECK_THAT(relative_entropy(DensityMatrix::basis_state(4, 0),
                              DensityMatrix::basis_state(4, 0)),
             WithinAbs(0.0, 1e-14));

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 4;
    const DensityMatrix rho(oracle::state(rng, d, 1 + trial % d));
    const DensityMatrix sigma(oracle::state(rng, d, d));
    const double s = relative_entropy(rho, sigma);
    CHECK_THAT(s, WithinAbs(oracle::relative_entropy(rho.matrix(), sigma.matrix()),
                            1e-9));
    CHECK(s >= -1e-12);
    // Pinsker: D >= 2 T^2
    const double t = trace_distance(rho, sigma);
    CHECK(s >= 2.0 * t * t - 1e-12);
  }
}

TEST_CASE("trace distance", "[metrics]") {
  CHECK_THAT(trace_distance(DensityMatrix::basis_state(3, 0),
                            DensityMatrix::basis_state(3, 2)),
             WithinAbs(1.0, 1e-15));
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK_THAT(trace_distance(DensityMatrix::pure(plus),
                            DensityMatrix::basis_state(2, 0)),
             WithinAbs(1.0 / std::sqrt(2.0), 1e-14));
  CHECK_THROWS_AS(trace_distance(DensityMatrix::maximally_mixed(2),
                                 DensityMatrix::maximally_mixed(3)),
                  ShapeError);
}
