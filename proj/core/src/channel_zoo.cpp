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

#include "petzlab/channel_zoo.hpp"

#include <cmath>
#include <sstream>

#include "petzlab/errors.hpp"

namespace petzlab {

namespace {

void require_dim(int dim, const char* what) {
  if (dim < 2) {
    std::ostringstream os;
    os << what << ": dimension must be >= 2, got " << dim;
    throw ShapeError(os.str());
  }
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << ": " << p << " is outside [0, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace

NoiseStrength::NoiseStrength(double p) : p_(p) {
  require_probability(p, "noise strength");
}

KrausSet identity_channel(int dim) {
  require_dim(dim, "identity_channel");
  return KrausSet(dim, {linalg::identity(dim)});
}

KrausSet dephasing(int dim, NoiseStrength p) {
  require_dim(dim, "dephasing");
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(dim) + 1);
  ops.emplace_back(std::sqrt(1.0 - p.value()) * linalg::identity(dim));
  for (int k = 0; k < dim; ++k) {
    ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
    proj(k, k) = std::sqrt(p.value());
    ops.push_back(std::move(proj));
  }
  return KrausSet(dim, std::move(ops));
}

KrausSet amplitude_damping(int dim, NoiseStrength p) {
  require_dim(dim, "amplitude_damping");
  const std::vector<double> probs(static_cast<std::size_t>(dim) - 1, p.value());
  return amplitude_damping_nonuniform(probs);
}

KrausSet amplitude_damping_nonuniform(std::span<const double> probs) {
  const int dim = static_cast<int>(probs.size()) + 1;
  require_dim(dim, "amplitude_damping_nonuniform");
  for (double p : probs) require_probability(p, "decay probability");

  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(dim));
  ComplexMatrix k0 = ComplexMatrix::Zero(dim, dim);
  k0(0, 0) = 1.0;
  for (int i = 1; i < dim; ++i) k0(i, i) = std::sqrt(1.0 - probs[i - 1]);
  ops.push_back(std::move(k0));
  for (int i = 1; i < dim; ++i) {
    ComplexMatrix ki = ComplexMatrix::Zero(dim, dim);
    ki(0, i) = std::sqrt(probs[i - 1]);
    ops.push_back(std::move(ki));
  }
  return KrausSet(dim, std::move(ops));
}

DensityMatrix reference_state(int dim, double epsilon) {
  require_dim(dim, "reference_state");
  require_probability(epsilon, "reference epsilon");
  ComplexMatrix sigma = ComplexMatrix::Zero(dim, dim);
  sigma(0, 0) = 1.0 - epsilon;
  for (int n = 1; n < dim; ++n) sigma(n, n) = epsilon / (dim - 1);
  return DensityMatrix(sigma);
}

double maximally_mixed_epsilon(int dim) {
  require_dim(dim, "maximally_mixed_epsilon");
  return 1.0 - 1.0 / dim;
}

}  // namespace petzlab
