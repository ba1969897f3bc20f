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

// Figures of merit for channels and recovery maps.

#include <string>
#include <utility>
#include <vector>

#include "petzlab/channel.hpp"

namespace petzlab {

struct MetricReport {
  std::string name;
  double value;
  std::vector<std::pair<std::string, std::string>> params;
};

/// || J(a)/d - J(b)/d ||_1 on trace-one Choi states; lies in [0, 2].
/// D(P o L, identity) is the recovery figure of merit.
double choi_distance(const KrausSet& a, const KrausSet& b);
double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);

/// N = 1/2 || L(1/d) - 1/d ||_1; zero iff L is unital.
double non_unitality(const KrausSet& channel);

/// delta V = |det M| of the affine map: volume of the accessible set
/// relative to the full Bloch body.
double volume(const KrausSet& channel);

/// S(rho||sigma) = Tr(rho log rho - rho log sigma), natural log.
/// +infinity when supp(rho) is not contained in supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 1/2 || a - b ||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace petzlab
