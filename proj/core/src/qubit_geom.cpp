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

#include "petzlab/qubit_geom.hpp"

#include <cmath>
#include <sstream>

#include "petzlab/errors.hpp"

namespace petzlab::qubit {

namespace {

// Conversion between the orthonormal basis coordinates of channel.hpp
// (Gamma = sigma / sqrt 2) and standard Bloch coordinates.
const double kBasisScale = std::sqrt(2.0);

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << what << " = " << v << " is outside [0, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector bloch_from_state(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ShapeError("bloch_from_state: state is not a qubit");
  const ComplexMatrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
          (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix state_from_bloch(const BlochVector& v) {
  if (!(v.norm() <= 1.0 + 1e-9)) {
    std::ostringstream os;
    os << "state_from_bloch: |r| = " << v.norm() << " exceeds 1";
    throw DomainError(os.str());
  }
  ComplexMatrix m(2, 2);
  m << Complex(1.0 + v.z, 0.0), Complex(v.x, -v.y),
       Complex(v.x, v.y), Complex(1.0 - v.z, 0.0);
  // Slightly outside the ball is accepted above; keep the state tolerance
  // consistent with it.
  return DensityMatrix(0.5 * m, 1e-8);
}

BlochVector petz_dephasing_bloch(const BlochVector& r, double p) {
  require_unit(p, "p");
  const double factor = 1.0 + p * p - 2.0 * p;
  return {factor * r.x, factor * r.y, r.z};
}

PetzAdAffine petz_ad_affine(double p, double eps) {
  require_unit(p, "p");
  require_unit(eps, "eps");
  const double denom = 1.0 - eps * (1.0 - p);
  if (!(denom > 0.0)) {
    throw DomainError("petz_ad_affine: degenerate point eps = 1, p = 0");
  }
  PetzAdAffine out{};
  out.transverse =
      std::sqrt(1.0 - eps) * std::sqrt(std::abs(1.0 - p)) / std::sqrt(denom);
  out.longitudinal = (1.0 - eps + eps * p - p) / denom;
  out.shift = p * (1.0 - 2.0 * eps) / denom;
  return out;
}

BlochVector petz_ad_bloch(const BlochVector& r, double p, double eps) {
  const PetzAdAffine a = petz_ad_affine(p, eps);
  return {a.transverse * r.x, a.transverse * r.y,
          a.longitudinal * r.z + a.shift};
}

Ellipsoid accessible_ellipsoid(const KrausSet& channel) {
  if (channel.dim() != 2) {
    throw ShapeError("accessible_ellipsoid: channel is not a qubit channel");
  }
  const AffineMap affine = affine_from_channel(channel);
  Eigen::JacobiSVD<RealMatrix> svd(affine.M);
  const RealVector& s = svd.singularValues();  // descending
  Ellipsoid out{};
  out.semi_axes = {s(0), s(1), s(2)};
  out.center = {affine.tau(0) / kBasisScale, affine.tau(1) / kBasisScale,
                affine.tau(2) / kBasisScale};
  return out;
}

}  // namespace petzlab::qubit
