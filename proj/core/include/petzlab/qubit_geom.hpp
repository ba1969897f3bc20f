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

// Qubit geometry in standard Bloch coordinates, rho = (1 + r . sigma) / 2.
// Also carries the closed-form recovered Bloch vectors for dephasing and
// amplitude damping, which serve as oracles for the numeric pipeline.

#include <array>

#include "petzlab/channel.hpp"

namespace petzlab::qubit {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

struct Ellipsoid {
  std::array<double, 3> semi_axes;  // descending
  BlochVector center;
};

BlochVector bloch_from_state(const DensityMatrix& rho);

/// Throws DomainError for |v| > 1 + 1e-9.
DensityMatrix state_from_bloch(const BlochVector& v);

/// Recovered Bloch vector of P o L for qubit dephasing with any diagonal
/// reference: ((1-p)^2 r_x, (1-p)^2 r_y, r_z).
BlochVector petz_dephasing_bloch(const BlochVector& r, double p);

/// Scale factors and shift of P o L for qubit amplitude damping with
/// reference sigma(eps).
struct PetzAdAffine {
  double transverse;    // applies to r_x and r_y
  double longitudinal;  // applies to r_z
  double shift;         // tau_z
};

/// Throws DomainError for p or eps outside [0, 1] and for the degenerate
/// point eps = 1, p = 0.
PetzAdAffine petz_ad_affine(double p, double eps);

/// Recovered Bloch vector (transverse r_x, transverse r_y,
/// longitudinal r_z + shift).
BlochVector petz_ad_bloch(const BlochVector& r, double p, double eps);

/// Image of the Bloch ball under a qubit channel: semi-axes are the singular
/// values of M, the center is tau. Throws ShapeError for d != 2.
Ellipsoid accessible_ellipsoid(const KrausSet& channel);

}  // namespace petzlab::qubit
