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

// Petz recovery map
//
//   P(X) = sigma^{1/2} L^dagger( L(sigma)^{-1/2} X L(sigma)^{-1/2} ) sigma^{1/2}
//
// for a channel L with Kraus operators K_a and a reference state sigma. In
// operator-sum form P has Kraus operators R_a = sigma^{1/2} K_a^dagger
// L(sigma)^{-1/2}. L(sigma)^{-1/2} is the pseudo-inverse square root on the
// support of L(sigma), so for rank-deficient sigma the map is trace
// preserving only on that support.

#include <optional>

#include "petzlab/channel.hpp"

namespace petzlab {

struct PetzMap {
  KrausSet channel;         // the recovery map itself
  DensityMatrix reference;  // sigma
  KrausSet source_channel;  // the channel being recovered
  double support_tol;       // threshold used for L(sigma)^{-1/2}
};

/// Kraus-form construction. `support_tol` defaults to 1e-10 * lambda_max of
/// L(sigma). Throws ShapeError on dimension mismatch and NumericError when
/// L(sigma) vanishes.
PetzMap petz_map(const KrausSet& channel, const DensityMatrix& sigma,
                 std::optional<double> support_tol = std::nullopt);

/// Superoperator via the three-factor form
///   A = (sigma^{1/2} (x) (sigma^{1/2})^T) . sum_a M_a (x) conj(M_a),
///   M_a = K_a^dagger L(sigma)^{-1/2}.
/// Independent of the Kraus route above; both must agree.
SuperOperator petz_superop_aform(
    const KrausSet& channel, const DensityMatrix& sigma,
    std::optional<double> support_tol = std::nullopt);

/// P o L as a Kraus set.
KrausSet recovery_composition(const PetzMap& petz);

/// P applied to a channel output.
DensityMatrix recover(const PetzMap& petz, const DensityMatrix& state);

/// S(rho||sigma) - S(L(rho)||L(sigma)), natural log. Non-negative by data
/// processing; zero exactly when the Petz map with reference sigma recovers
/// rho. Returns +infinity when supp(rho) is not inside supp(sigma).
double recoverability_defect(const KrausSet& channel,
                             const DensityMatrix& sigma,
                             const DensityMatrix& rho);

}  // namespace petzlab
