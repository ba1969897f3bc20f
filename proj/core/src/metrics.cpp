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

#include "petzlab/metrics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "petzlab/errors.hpp"

namespace petzlab {

namespace {

// Eigenvalues of sigma at or below this (relative to its largest) are
// outside the support; rho-weight on them beyond kLeakTol means
// supp(rho) is not contained in supp(sigma).
constexpr double kSupportTol = 1e-14;
constexpr double kLeakTol = 1e-12;

void require_dims(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw ShapeError(os.str());
  }
}

}  // namespace

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  require_dims(a.dim, b.dim, "choi_distance");
  const ComplexMatrix diff = (a.matrix - b.matrix) / static_cast<double>(a.dim);
  return linalg::trace_norm_hermitian(diff);
}

double choi_distance(const KrausSet& a, const KrausSet& b) {
  require_dims(a.dim(), b.dim(), "choi_distance");
  return choi_distance(choi_from_kraus(a), choi_from_kraus(b));
}

double non_unitality(const KrausSet& channel) {
  const int d = channel.dim();
  const ComplexMatrix mixed = linalg::identity(d) / static_cast<double>(d);
  return 0.5 * linalg::trace_norm_hermitian(petzlab::apply(channel, mixed) - mixed);
}

double volume(const KrausSet& channel) {
  return std::abs(affine_from_channel(channel).M.determinant());
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_dims(rho.dim(), sigma.dim(), "relative_entropy");
  const RealVector rho_values = linalg::eigenvalues_hermitian(rho.matrix());
  const linalg::HermitianEig sigma_eig = linalg::eig_hermitian(sigma.matrix());

  double entropy_term = 0.0;  // Tr(rho log rho)
  for (double lambda : rho_values) {
    if (lambda > 0.0) entropy_term += lambda * std::log(lambda);
  }

  // Tr(rho log sigma) = sum_j <b_j|rho|b_j> log mu_j
  const double mu_max = sigma_eig.eigenvalues(0);
  double cross_term = 0.0;
  for (Eigen::Index j = 0; j < sigma_eig.eigenvalues.size(); ++j) {
    const auto b = sigma_eig.eigenvectors.col(j);
    const double weight = (b.adjoint() * rho.matrix() * b)(0, 0).real();
    const double mu = sigma_eig.eigenvalues(j);
    if (mu <= kSupportTol * mu_max) {
      if (weight > kLeakTol) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross_term += weight * std::log(mu);
  }
  return entropy_term - cross_term;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_dims(a.dim(), b.dim(), "trace_distance");
  return 0.5 * linalg::trace_norm_hermitian(a.matrix() - b.matrix());
}

}  // namespace petzlab
