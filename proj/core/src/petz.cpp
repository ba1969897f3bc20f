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

#include "petzlab/petz.hpp"

#include <cmath>
#include <sstream>

#include "petzlab/errors.hpp"
#include "petzlab/metrics.hpp"

namespace petzlab {

namespace {

struct PetzFactors {
  ComplexMatrix sigma_sqrt;
  ComplexMatrix output_pinv_sqrt;
  double support_tol;
};

PetzFactors petz_factors(const KrausSet& channel, const DensityMatrix& sigma,
                         std::optional<double> support_tol) {
  if (channel.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "petz_map: channel dimension " << channel.dim()
       << " does not match reference dimension " << sigma.dim();
    throw ShapeError(os.str());
  }
  const ComplexMatrix output = linalg::hermitize(petzlab::apply(channel, sigma.matrix()));
  const double lambda_max = linalg::eigenvalues_hermitian(output)(0);
  if (!(lambda_max > 0.0)) {
    throw NumericError("petz_map: channel output of the reference vanishes");
  }
  const double tol =
      support_tol.value_or(linalg::kRelativeSupportTol * lambda_max);
  return PetzFactors{linalg::matrix_sqrt(sigma.matrix()),
                     linalg::pinv_sqrt(output, tol), tol};
}

}  // namespace

PetzMap petz_map(const KrausSet& channel, const DensityMatrix& sigma,
                 std::optional<double> support_tol) {
  const PetzFactors f = petz_factors(channel, sigma, support_tol);
  std::vector<ComplexMatrix> ops;
  ops.reserve(channel.size());
  for (const auto& k : channel.operators()) {
    ops.emplace_back(f.sigma_sqrt * k.adjoint() * f.output_pinv_sqrt);
  }
  return PetzMap{KrausSet(channel.dim(), std::move(ops)), sigma, channel,
                 f.support_tol};
}

SuperOperator petz_superop_aform(const KrausSet& channel,
                                 const DensityMatrix& sigma,
                                 std::optional<double> support_tol) {
  const PetzFactors f = petz_factors(channel, sigma, support_tol);
  const int d = channel.dim();
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix inner = ComplexMatrix::Zero(n, n);
  for (const auto& k : channel.operators()) {
    const ComplexMatrix m = k.adjoint() * f.output_pinv_sqrt;
    inner += linalg::kron(m, m.conjugate());
  }
  const ComplexMatrix outer =
      linalg::kron(f.sigma_sqrt, f.sigma_sqrt.transpose());
  return SuperOperator{d, outer * inner};
}

KrausSet recovery_composition(const PetzMap& petz) {
  return compose(petz.channel, petz.source_channel);
}

DensityMatrix recover(const PetzMap& petz, const DensityMatrix& state) {
  return petzlab::apply(petz.channel, state);
}

double recoverability_defect(const KrausSet& channel,
                             const DensityMatrix& sigma,
                             const DensityMatrix& rho) {
  const double before = relative_entropy(rho, sigma);
  if (std::isinf(before)) return before;
  const double after =
      relative_entropy(petzlab::apply(channel, rho), petzlab::apply(channel, sigma));
  return before - after;
}

}  // namespace petzlab
