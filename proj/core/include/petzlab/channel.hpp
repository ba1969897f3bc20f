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

// Channel representations and conversions between them.
//
// Conventions
//   * Operators are vectorized row-major: |X>> has entry X_jl at j*d + l.
//     The superoperator of a Kraus set is then A = sum_i K_i (x) conj(K_i)
//     and |Lambda(X)>> = A |X>>.
//   * The Choi matrix is J = sum_i |K_i>> <<K_i|, i.e.
//     J_{ij,kl} = <i| Lambda(|j><l|) |k>  (output factor first). It is the
//     familiar sum_ij |i><j| (x) Lambda(|i><j|) up to a swap of the two
//     tensor factors, so spectrum, trace (= d) and positivity agree, and it
//     makes reshuffle an involution with reshuffle(A) = J.
//   * The affine (Bloch) form uses the orthonormal Hermitian basis of
//     bloch_basis(): Gamma_0 = 1/sqrt(d), Tr(Gamma_i Gamma_j) = delta_ij.

#include <span>
#include <vector>

#include "petzlab/linalg.hpp"

namespace petzlab {

/// Validated d x d state: Hermitian, unit trace, positive semidefinite, all
/// within `tol`. The stored matrix is hermitized.
class DensityMatrix {
 public:
  static constexpr double kDefaultTol = 1e-9;

  explicit DensityMatrix(const ComplexMatrix& matrix, double tol = kDefaultTol);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Identity / d.
  static DensityMatrix maximally_mixed(int dim);
  /// |k><k|.
  static DensityMatrix basis_state(int dim, int k);
  /// |psi><psi| for a (not necessarily normalized) non-zero vector.
  static DensityMatrix pure(const ComplexVector& psi);

 private:
  ComplexMatrix matrix_;
};

/// Operator-sum representation. Construction only checks shapes; trace
/// preservation is reported by tp_residual() and verify_cptp(), since
/// recovery maps built on a rank-deficient reference are legitimately
/// trace-decreasing.
class KrausSet {
 public:
  KrausSet(int dim, std::vector<ComplexMatrix> operators);

  int dim() const { return dim_; }
  std::size_t size() const { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  const ComplexMatrix& operator[](std::size_t i) const { return operators_[i]; }

  /// || sum_i K_i^dagger K_i - 1 ||_F
  double tp_residual() const;

 private:
  int dim_;
  std::vector<ComplexMatrix> operators_;
};

struct ChoiMatrix {
  int dim;
  ComplexMatrix matrix;  // d^2 x d^2
};

struct SuperOperator {
  int dim;
  ComplexMatrix matrix;  // d^2 x d^2, acts on row-major vectorizations
};

/// r -> M r + tau in Bloch coordinates of bloch_basis(dim), where a state is
/// rho = (1 + r . Gamma) / d.
struct AffineMap {
  int dim;
  RealMatrix M;
  RealVector tau;

  RealVector apply(const RealVector& r) const { return M * r + tau; }
};

struct CptpReport {
  double cp_min_eig;
  double tp_residual;
  bool ok;
};

// --- vectorization -------------------------------------------------------

/// Row-major vectorization |X>>.
ComplexVector vec(const ComplexMatrix& x);
/// Inverse of vec for a d^2 vector.
ComplexMatrix unvec(const ComplexVector& v, int dim);

// --- application ---------------------------------------------------------

/// sum_i K_i X K_i^dagger on an arbitrary operator.
ComplexMatrix apply(const KrausSet& channel, const ComplexMatrix& x);

/// Channel output on a state, hermitized. Throws ShapeError on dimension
/// mismatch and NumericError if the output is not a state (non-TP input).
DensityMatrix apply(const KrausSet& channel, const DensityMatrix& state);

/// De-vectorized A |X>>.
ComplexMatrix apply(const SuperOperator& channel, const ComplexMatrix& x);

// --- conversions ---------------------------------------------------------

ChoiMatrix choi_from_kraus(const KrausSet& channel);
SuperOperator superop_from_kraus(const KrausSet& channel);

/// A_{ik,jl} = X_{ij,kl}. Involution; maps a superoperator to its Choi
/// matrix and back. Throws ShapeError unless X is square with a perfect
/// square side.
ComplexMatrix reshuffle(const ComplexMatrix& x);

ChoiMatrix choi_from_superop(const SuperOperator& channel);
SuperOperator superop_from_choi(const ChoiMatrix& choi);

// --- algebra -------------------------------------------------------------

/// outer after inner: Kraus operators {O_i I_j}, outer index major.
KrausSet compose(const KrausSet& outer, const KrausSet& inner);
SuperOperator compose(const SuperOperator& outer, const SuperOperator& inner);

/// Adjoint map, Kraus operators {K_i^dagger}. dual(L)(1) = 1 iff L is
/// trace-preserving.
KrausSet dual(const KrausSet& channel);

/// cp_min_eig = smallest Choi eigenvalue; tp_residual as in KrausSet;
/// ok iff cp_min_eig >= -tol and tp_residual <= tol.
CptpReport verify_cptp(const KrausSet& channel, double tol);

// --- Bloch representation ------------------------------------------------

/// Generalized Gell-Mann matrices normalized to Tr(G_i G_j) = delta_ij,
/// without Gamma_0. Order: symmetric off-diagonal (j<k lexicographic),
/// antisymmetric off-diagonal (same order), diagonal. For d = 2 this is
/// (sigma_x, sigma_y, sigma_z) / sqrt(2).
std::vector<ComplexMatrix> bloch_basis(int dim);

/// Coefficients Tr(Gamma_i X) for i = 1..d^2-1, real parts only (X is
/// expected Hermitian).
RealVector bloch_coefficients(const ComplexMatrix& x);

/// rho = (1 + r . Gamma) / d  <->  r_i = d Tr(Gamma_i rho).
RealVector bloch_vector(const DensityMatrix& state);
ComplexMatrix operator_from_bloch(const RealVector& r, int dim);

/// M_ij = Tr(Gamma_i Lambda(Gamma_j)), tau_i = Tr(Gamma_i Lambda(1)).
AffineMap affine_from_channel(const KrausSet& channel);

}  // namespace petzlab
