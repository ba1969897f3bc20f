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

// Dense complex kernels shared by every other module: Hermitian
// eigendecomposition, spectral matrix functions, trace norm, Kronecker
// products. All functions are pure and operate on value-semantic Eigen
// matrices.

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace petzlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace linalg {

/// Default Hermiticity tolerance accepted by eig_hermitian (absolute,
/// scaled by max(1, ||H||_max)).
inline constexpr double kHermitianTol = 1e-9;

/// Negative eigenvalues down to -kPsdClamp are treated as round-off and
/// clamped to zero by the PSD matrix functions.
inline constexpr double kPsdClamp = 1e-10;

/// Relative support threshold of pinv_sqrt: eigenvalues at or below
/// kRelativeSupportTol * lambda_max are outside the support.
inline constexpr double kRelativeSupportTol = 1e-10;

struct HermitianEig {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // unitary, columns match eigenvalues
};

ComplexMatrix identity(int dim);

/// Largest deviation max_ij |H_ij - conj(H_ji)|.
double hermiticity_defect(const ComplexMatrix& matrix);

/// (M + M^dagger) / 2. Throws ShapeError for non-square input.
ComplexMatrix hermitize(const ComplexMatrix& matrix);

/// Full eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws DomainError if H is not Hermitian within `hermitian_tol`, and
/// NumericError if the solver does not converge.
HermitianEig eig_hermitian(const ComplexMatrix& matrix,
                           double hermitian_tol = kHermitianTol);

/// Eigenvalues only (descending); cheaper for large matrices.
RealVector eigenvalues_hermitian(const ComplexMatrix& matrix,
                                 double hermitian_tol = kHermitianTol);

/// Principal square root of a PSD matrix. The input is hermitized first;
/// eigenvalues in [-kPsdClamp, 0) are clamped to zero, anything more
/// negative raises DomainError.
ComplexMatrix matrix_sqrt(const ComplexMatrix& matrix);

/// Pseudo-inverse square root on the support of a PSD matrix:
/// V diag(f(lambda)) V^dagger with f = lambda^{-1/2} above the support
/// threshold and 0 below it. `support_tol` defaults to
/// kRelativeSupportTol * lambda_max. An all-zero input has empty support
/// and raises NumericError.
ComplexMatrix pinv_sqrt(const ComplexMatrix& matrix,
                        std::optional<double> support_tol = std::nullopt);

/// Sum of singular values. Hermitian inputs take the eigenvalue path.
double trace_norm(const ComplexMatrix& matrix);

/// Sum of |eigenvalues| of a Hermitian matrix (the input is hermitized).
double trace_norm_hermitian(const ComplexMatrix& matrix);

/// Kronecker product with block layout (A_ij * B).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace linalg
}  // namespace petzlab
