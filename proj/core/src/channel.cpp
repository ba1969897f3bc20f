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

#include "petzlab/channel.hpp"

#include <cmath>
#include <sstream>

#include "petzlab/errors.hpp"

namespace petzlab {

namespace {

void require_dims(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw ShapeError(os.str());
  }
}

int square_root_side(Eigen::Index side, const char* what) {
  const auto root = static_cast<Eigen::Index>(std::llround(std::sqrt(side)));
  if (side < 1 || root * root != side) {
    std::ostringstream os;
    os << what << ": side " << side << " is not a perfect square";
    throw ShapeError(os.str());
  }
  return static_cast<int>(root);
}

}  // namespace

// --- DensityMatrix -------------------------------------------------------

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix, double tol) {
  if (matrix.rows() < 1 || matrix.rows() != matrix.cols()) {
    throw ShapeError("DensityMatrix: matrix must be square and non-empty");
  }
  const double defect = linalg::hermiticity_defect(matrix);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (defect " << defect << ")";
    throw DomainError(os.str());
  }
  matrix_ = linalg::hermitize(matrix);
  const double trace = matrix_.trace().real();
  if (!(std::abs(trace - 1.0) <= tol)) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << trace << " is not 1";
    throw DomainError(os.str());
  }
  const double min_eig = linalg::eigenvalues_hermitian(matrix_).minCoeff();
  if (!(min_eig >= -tol)) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << min_eig;
    throw DomainError(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw ShapeError("maximally_mixed: dim must be >= 1");
  return DensityMatrix(linalg::identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(int dim, int k) {
  if (dim < 1 || k < 0 || k >= dim) {
    throw ShapeError("basis_state: index out of range");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (psi.size() < 1 || !(norm > 0.0)) {
    throw DomainError("pure: state vector must be non-zero");
  }
  const ComplexVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

// --- KrausSet ------------------------------------------------------------

KrausSet::KrausSet(int dim, std::vector<ComplexMatrix> operators)
    : dim_(dim), operators_(std::move(operators)) {
  if (dim < 1) throw ShapeError("KrausSet: dim must be >= 1");
  if (operators_.empty()) throw ShapeError("KrausSet: no operators");
  for (const auto& k : operators_) {
    if (k.rows() != dim || k.cols() != dim) {
      std::ostringstream os;
      os << "KrausSet: operator of shape " << k.rows() << "x" << k.cols()
         << " in a dimension-" << dim << " set";
      throw ShapeError(os.str());
    }
  }
}

double KrausSet::tp_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : operators_) sum.noalias() += k.adjoint() * k;
  return (sum - linalg::identity(dim_)).norm();
}

// --- vectorization -------------------------------------------------------

ComplexVector vec(const ComplexMatrix& x) {
  const ComplexMatrix xt = x.transpose();
  return Eigen::Map<const ComplexVector>(xt.data(), xt.size());
}

ComplexMatrix unvec(const ComplexVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw ShapeError("unvec: vector length is not dim^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim).transpose();
}

// --- application ---------------------------------------------------------

ComplexMatrix apply(const KrausSet& channel, const ComplexMatrix& x) {
  require_dims(channel.dim(), static_cast<int>(x.rows()), "apply");
  require_dims(channel.dim(), static_cast<int>(x.cols()), "apply");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& k : channel.operators()) {
    out.noalias() += k * x * k.adjoint();
  }
  return out;
}

DensityMatrix apply(const KrausSet& channel, const DensityMatrix& state) {
  require_dims(channel.dim(), state.dim(), "apply");
  const ComplexMatrix out = linalg::hermitize(petzlab::apply(channel, state.matrix()));
  try {
    return DensityMatrix(out);
  } catch (const DomainError& e) {
    throw NumericError(std::string("apply: channel output is not a state: ") +
                       e.what());
  }
}

ComplexMatrix apply(const SuperOperator& channel, const ComplexMatrix& x) {
  require_dims(channel.dim, static_cast<int>(x.rows()), "apply");
  return unvec(channel.matrix * vec(x), channel.dim);
}

// --- conversions ---------------------------------------------------------

ChoiMatrix choi_from_kraus(const KrausSet& channel) {
  const int d = channel.dim();
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix columns(n, static_cast<Eigen::Index>(channel.size()));
  for (std::size_t i = 0; i < channel.size(); ++i) {
    columns.col(static_cast<Eigen::Index>(i)) = vec(channel[i]);
  }
  ComplexMatrix lower = ComplexMatrix::Zero(n, n);
  lower.selfadjointView<Eigen::Lower>().rankUpdate(columns);
  ChoiMatrix out{d, ComplexMatrix(n, n)};
  out.matrix = lower.selfadjointView<Eigen::Lower>();
  return out;
}

SuperOperator superop_from_kraus(const KrausSet& channel) {
  const int d = channel.dim();
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  SuperOperator out{d, ComplexMatrix::Zero(n, n)};
  for (const auto& k : channel.operators()) {
    out.matrix += linalg::kron(k, k.conjugate());
  }
  return out;
}

ComplexMatrix reshuffle(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) {
    throw ShapeError("reshuffle: matrix must be square");
  }
  const Eigen::Index d = square_root_side(x.rows(), "reshuffle");
  ComplexMatrix out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) {
          out(i * d + k, j * d + l) = x(i * d + j, k * d + l);
        }
      }
    }
  }
  return out;
}

ChoiMatrix choi_from_superop(const SuperOperator& channel) {
  return ChoiMatrix{channel.dim, reshuffle(channel.matrix)};
}

SuperOperator superop_from_choi(const ChoiMatrix& choi) {
  return SuperOperator{choi.dim, reshuffle(choi.matrix)};
}

// --- algebra -------------------------------------------------------------

KrausSet compose(const KrausSet& outer, const KrausSet& inner) {
  require_dims(outer.dim(), inner.dim(), "compose");
  std::vector<ComplexMatrix> ops;
  ops.reserve(outer.size() * inner.size());
  for (const auto& o : outer.operators()) {
    for (const auto& i : inner.operators()) {
      ops.emplace_back(o * i);
    }
  }
  return KrausSet(outer.dim(), std::move(ops));
}

SuperOperator compose(const SuperOperator& outer, const SuperOperator& inner) {
  require_dims(outer.dim, inner.dim, "compose");
  return SuperOperator{outer.dim, outer.matrix * inner.matrix};
}

KrausSet dual(const KrausSet& channel) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(channel.size());
  for (const auto& k : channel.operators()) ops.emplace_back(k.adjoint());
  return KrausSet(channel.dim(), std::move(ops));
}

CptpReport verify_cptp(const KrausSet& channel, double tol) {
  const ChoiMatrix choi = choi_from_kraus(channel);
  CptpReport report{};
  report.cp_min_eig = linalg::eigenvalues_hermitian(choi.matrix).minCoeff();
  report.tp_residual = channel.tp_residual();
  report.ok = report.cp_min_eig >= -tol && report.tp_residual <= tol;
  return report;
}

// --- Bloch representation ------------------------------------------------

std::vector<ComplexMatrix> bloch_basis(int dim) {
  if (dim < 2) throw ShapeError("bloch_basis: dim must be >= 2");
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(dim) * dim - 1);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
      g(j, k) = s;
      g(k, j) = s;
      basis.push_back(std::move(g));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
      g(j, k) = -i_unit * s;
      g(k, j) = i_unit * s;
      basis.push_back(std::move(g));
    }
  }
  for (int l = 1; l < dim; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) g(m, m) = norm;
    g(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(std::move(g));
  }
  return basis;
}

RealVector bloch_coefficients(const ComplexMatrix& x) {
  if (x.rows() < 2 || x.rows() != x.cols()) {
    throw ShapeError("bloch_coefficients: expected a square matrix, d >= 2");
  }
  const Eigen::Index d = x.rows();
  const double s = 1.0 / std::sqrt(2.0);
  RealVector out(d * d - 1);
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      out(idx++) = s * (x(k, j) + x(j, k)).real();
    }
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      // Tr(G X) with G = s (-i|j><k| + i|k><j|)
      out(idx++) = s * (Complex(0.0, -1.0) * x(k, j) +
                        Complex(0.0, 1.0) * x(j, k)).real();
    }
  }
  for (Eigen::Index l = 1; l < d; ++l) {
    Complex acc = 0.0;
    for (Eigen::Index m = 0; m < l; ++m) acc += x(m, m);
    acc -= static_cast<double>(l) * x(l, l);
    out(idx++) = acc.real() / std::sqrt(static_cast<double>(l) * (l + 1));
  }
  return out;
}

RealVector bloch_vector(const DensityMatrix& state) {
  return static_cast<double>(state.dim()) * bloch_coefficients(state.matrix());
}

ComplexMatrix operator_from_bloch(const RealVector& r, int dim) {
  const auto basis = bloch_basis(dim);
  if (r.size() != static_cast<Eigen::Index>(basis.size())) {
    throw ShapeError("operator_from_bloch: Bloch vector has wrong length");
  }
  ComplexMatrix out = linalg::identity(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out += r(static_cast<Eigen::Index>(i)) * basis[i];
  }
  return out / static_cast<double>(dim);
}

AffineMap affine_from_channel(const KrausSet& channel) {
  const int d = channel.dim();
  const auto basis = bloch_basis(d);
  const auto n = static_cast<Eigen::Index>(basis.size());
  AffineMap out{d, RealMatrix(n, n), RealVector(n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    out.M.col(j) = bloch_coefficients(petzlab::apply(channel, basis[j]));
  }
  out.tau = bloch_coefficients(petzlab::apply(channel, linalg::identity(d)));
  return out;
}

}  // namespace petzlab
