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

#include "petzlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "petzlab/errors.hpp"

namespace petzlab::linalg {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows()
       << "x" << m.cols();
    throw ShapeError(os.str());
  }
}

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol * scale)) {
    std::ostringstream os;
    os << what << ": matrix is not Hermitian (defect " << defect << ")";
    throw DomainError(os.str());
  }
}

// V f(lambda) V^dagger for a PSD input with the round-off clamp applied.
template <typename F>
ComplexMatrix psd_function(const ComplexMatrix& matrix, F&& f,
                           const char* what) {
  const HermitianEig eig = eig_hermitian(hermitize(matrix));
  const double scale = std::max(1.0, std::abs(eig.eigenvalues(0)));
  RealVector values(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    double lambda = eig.eigenvalues(i);
    if (lambda < -kPsdClamp * scale) {
      std::ostringstream os;
      os << what << ": matrix is not positive semidefinite (eigenvalue "
         << lambda << ")";
      throw DomainError(os.str());
    }
    values(i) = f(std::max(lambda, 0.0));
  }
  return eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

ComplexMatrix identity(int dim) {
  return ComplexMatrix::Identity(dim, dim);
}

double hermiticity_defect(const ComplexMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) return INFINITY;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitize(const ComplexMatrix& matrix) {
  require_square(matrix, "hermitize");
  return (matrix + matrix.adjoint()) * 0.5;
}

HermitianEig eig_hermitian(const ComplexMatrix& matrix, double hermitian_tol) {
  require_square(matrix, "eig_hermitian");
  require_hermitian(matrix, hermitian_tol, "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(matrix));
  if (solver.info() != Eigen::Success) {
    throw NumericError("eig_hermitian: eigensolver did not converge");
  }
  // Eigen sorts ascending.
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

RealVector eigenvalues_hermitian(const ComplexMatrix& matrix,
                                 double hermitian_tol) {
  require_square(matrix, "eigenvalues_hermitian");
  require_hermitian(matrix, hermitian_tol, "eigenvalues_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      hermitize(matrix), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalues_hermitian: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& matrix) {
  return psd_function(
      matrix, [](double lambda) { return std::sqrt(lambda); }, "matrix_sqrt");
}

ComplexMatrix pinv_sqrt(const ComplexMatrix& matrix,
                        std::optional<double> support_tol) {
  const HermitianEig eig = eig_hermitian(hermitize(matrix));
  const double lambda_max = eig.eigenvalues(0);
  if (!(lambda_max > 0.0)) {
    throw NumericError("pinv_sqrt: matrix has empty support");
  }
  const double scale = std::max(1.0, lambda_max);
  const double threshold =
      support_tol.value_or(kRelativeSupportTol * lambda_max);
  if (!(threshold > 0.0)) {
    throw DomainError("pinv_sqrt: support tolerance must be positive");
  }
  RealVector values(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (lambda < -kPsdClamp * scale) {
      std::ostringstream os;
      os << "pinv_sqrt: matrix is not positive semidefinite (eigenvalue "
         << lambda << ")";
      throw DomainError(os.str());
    }
    values(i) = lambda > threshold ? 1.0 / std::sqrt(lambda) : 0.0;
  }
  return eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint();
}

double trace_norm_hermitian(const ComplexMatrix& matrix) {
  return eigenvalues_hermitian(hermitize(matrix)).cwiseAbs().sum();
}

double trace_norm(const ComplexMatrix& matrix) {
  require_square(matrix, "trace_norm");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if (hermiticity_defect(matrix) <= 1e-14 * scale) {
    return trace_norm_hermitian(matrix);
  }
  Eigen::BDCSVD<ComplexMatrix> svd(matrix);
  return svd.singularValues().sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace petzlab::linalg
