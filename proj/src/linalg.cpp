// Copyright 2026 The nc2ent Authors
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

#include "nc2ent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nc2ent/tolerances.hpp"

namespace nc2ent {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_common_dim(std::span<const StateVector> states, const char* what) {
  for (const auto& s : states) {
    if (s.dim() != states.front().dim()) {
      throw std::invalid_argument(std::string(what) + ": states have different dimensions");
    }
  }
}

}  // namespace

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) {
    throw std::invalid_argument("StateVector: dimension must be positive");
  }
  const double norm = amps_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol::kNorm) {
    std::ostringstream os;
    os << "StateVector: norm " << norm << " is not 1";
    throw std::invalid_argument(os.str());
  }
}

StateVector StateVector::normalized(const Vector& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("StateVector::normalized: zero or non-finite vector");
  }
  Vector v = amplitudes / norm;
  // A second pass takes the residual below one ulp-scale.
  v /= v.norm();
  return StateVector(std::move(v));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("StateVector::basis: index out of range");
  Vector v = Vector::Zero(idx(dim));
  v(idx(index)) = 1.0;
  return StateVector(std::move(v));
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  return StateVector::normalized(kron(a.amplitudes(), b.amplitudes()));
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

GramMatrix::GramMatrix(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw std::invalid_argument("GramMatrix: must be square and non-empty");
  }
  const double herm = max_abs(m_ - m_.adjoint());
  if (herm > tol::kHermitian) {
    std::ostringstream os;
    os << "GramMatrix: not Hermitian (deviation " << herm << ")";
    throw std::invalid_argument(os.str());
  }
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    if (std::abs(m_(i, i) - 1.0) > tol::kUnitDiagonal) {
      throw std::invalid_argument("GramMatrix: diagonal entries must be 1");
    }
  }
  // Symmetrize exactly so downstream eigensolvers see a Hermitian matrix.
  m_ = (0.5 * (m_ + m_.adjoint())).eval();
  for (Eigen::Index i = 0; i < m_.rows(); ++i) m_(i, i) = 1.0;
  const double lmin = min_eigenvalue();
  if (lmin < -tol::kPsd) {
    std::ostringstream os;
    os << "GramMatrix: not positive semidefinite (min eigenvalue " << lmin << ")";
    throw std::invalid_argument(os.str());
  }
}

double GramMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

GramMatrix gram_of(std::span<const StateVector> states) {
  if (states.empty()) throw std::invalid_argument("gram_of: empty family");
  require_common_dim(states, "gram_of");
  const auto n = idx(states.size());
  Matrix cols(idx(states.front().dim()), n);
  for (Eigen::Index i = 0; i < n; ++i) cols.col(i) = states[static_cast<std::size_t>(i)].amplitudes();
  return GramMatrix(cols.adjoint() * cols);
}

GramMatrix hadamard(const GramMatrix& g1, const GramMatrix& g2) {
  if (g1.size() != g2.size()) throw std::invalid_argument("hadamard: size mismatch");
  return GramMatrix(g1.matrix().cwiseProduct(g2.matrix()));
}

std::vector<StateVector> factor_gram(const GramMatrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(g.matrix());
  Eigen::VectorXd lambda = es.eigenvalues();
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (lambda(k) < -tol::kPsd) throw std::invalid_argument("factor_gram: input is not PSD");
    lambda(k) = lambda(k) < tol::kEigenZero ? 0.0 : std::sqrt(lambda(k));
  }
  const Matrix c = lambda.asDiagonal() * es.eigenvectors().adjoint();
  std::vector<StateVector> out;
  out.reserve(g.size());
  for (Eigen::Index i = 0; i < c.cols(); ++i) out.push_back(StateVector::normalized(c.col(i)));
  return out;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const Operator& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

Matrix orthonormal_complement(const Matrix& frame) {
  const Eigen::Index dim = frame.rows();
  const Eigen::Index missing = dim - frame.cols();
  Matrix basis(dim, dim);
  basis.leftCols(frame.cols()) = frame;
  Eigen::Index filled = frame.cols();
  std::vector<bool> used(static_cast<std::size_t>(dim), false);
  for (Eigen::Index step = 0; step < missing; ++step) {
    // Pivot on the standard basis vector with the largest residual; ties go to
    // the lowest index.
    Eigen::Index best = -1;
    double best_norm = -1.0;
    Vector best_vec;
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      Vector v = Vector::Zero(dim);
      v(j) = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        const auto q = basis.leftCols(filled);
        v -= q * (q.adjoint() * v);
      }
      const double n = v.norm();
      if (n > best_norm + 1e-14) {
        best = j;
        best_norm = n;
        best_vec = v;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    basis.col(filled++) = best_vec / best_norm;
  }
  return basis.rightCols(missing);
}

Operator synthesize_unitary(std::span<const StateVector> from, std::span<const StateVector> to) {
  if (from.empty() || from.size() != to.size()) {
    throw std::invalid_argument("synthesize_unitary: families must be non-empty and of equal length");
  }
  require_common_dim(from, "synthesize_unitary");
  require_common_dim(to, "synthesize_unitary");
  const auto n = idx(from.size());
  const auto dim_from = idx(from.front().dim());
  const auto dim = idx(to.front().dim());
  if (dim < dim_from) {
    throw std::invalid_argument("synthesize_unitary: target space smaller than source space");
  }

  Matrix f = Matrix::Zero(dim, n);
  Matrix t(dim, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    f.col(i).head(dim_from) = from[static_cast<std::size_t>(i)].amplitudes();
    t.col(i) = to[static_cast<std::size_t>(i)].amplitudes();
  }

  const double mismatch = max_abs(f.adjoint() * f - t.adjoint() * t);
  if (mismatch > tol::kGramMatch) {
    std::ostringstream os;
    os << "synthesize_unitary: Gram matrices differ by " << mismatch
       << "; no unitary maps one family onto the other";
    throw GramMismatch(os.str(), mismatch);
  }

  // Modified Gram-Schmidt over `from` in index order; the same triangular
  // transform is then applied to `to`.
  std::vector<Eigen::Index> pivots;
  Matrix qf(dim, 0);
  Matrix r = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector v = f.col(i);
    Vector coeffs = Vector::Zero(qf.cols());
    for (int pass = 0; pass < 2; ++pass) {
      const Vector c = qf.adjoint() * v;
      v -= qf * c;
      coeffs += c;
    }
    const double norm = v.norm();
    if (norm <= tol::kRank) continue;
    const auto k = static_cast<Eigen::Index>(pivots.size());
    r.block(0, k, k, 1) = coeffs;
    r(k, k) = norm;
    pivots.push_back(i);
    qf.conservativeResize(dim, k + 1);
    qf.col(k) = v / norm;
  }
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  Matrix t_sel(dim, rank);
  for (Eigen::Index k = 0; k < rank; ++k) t_sel.col(k) = t.col(pivots[static_cast<std::size_t>(k)]);
  const Matrix r_sel = r.topLeftCorner(rank, rank);
  // qt = t_sel * r_sel^{-1}
  const Matrix qt = r_sel.transpose().triangularView<Eigen::Lower>().solve(t_sel.transpose()).transpose();

  Matrix lambda = qt * qf.adjoint();
  if (rank < dim) {
    lambda += orthonormal_complement(qt) * orthonormal_complement(qf).adjoint();
  }
  // Nearest unitary (polar factor); removes the O(mismatch) non-orthogonality of qt.
  Eigen::JacobiSVD<Matrix> svd(lambda, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Operator u = svd.matrixU() * svd.matrixV().adjoint();

  const double map_err = max_abs(u * f - t);
  if (map_err > tol::kMapping) {
    std::ostringstream os;
    os << "synthesize_unitary: mapping error " << map_err << " exceeds tolerance";
    throw std::runtime_error(os.str());
  }
  return u;
}

SchmidtData schmidt_decompose(const StateVector& psi, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0 || dim_a * dim_b != psi.dim()) {
    throw std::invalid_argument("schmidt_decompose: dimA * dimB must equal the state dimension");
  }
  Matrix coeff(idx(dim_a), idx(dim_b));
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) coeff(idx(a), idx(b)) = psi[a * dim_b + b];
  }
  Eigen::JacobiSVD<Matrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtData sd;
  sd.dim_a = dim_a;
  sd.dim_b = dim_b;
  const auto& s = svd.singularValues();
  sd.coefficients.assign(s.data(), s.data() + s.size());
  sd.left_vectors = svd.matrixU();
  sd.right_vectors = svd.matrixV().conjugate();
  const double cut = tol::kRank * (s.size() > 0 ? s(0) : 0.0);
  sd.rank = static_cast<std::size_t>(std::count_if(sd.coefficients.begin(), sd.coefficients.end(),
                                                   [cut](double c) { return c > cut; }));
  return sd;
}

double entanglement_entropy(const SchmidtData& sd) {
  if (sd.rank <= 1) return 0.0;
  double h = 0.0;
  for (double c : sd.coefficients) {
    if (c <= tol::kEntropyCut) continue;
    const double p = c * c;
    h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

void validate_density(const Operator& rho, double tolerance) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    throw std::invalid_argument("density operator must be square and non-empty");
  }
  if (max_abs(rho - rho.adjoint()) > tolerance) {
    throw std::invalid_argument("density operator is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > tolerance) {
    throw std::invalid_argument("density operator does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tolerance) {
    throw std::invalid_argument("density operator is not positive semidefinite");
  }
}

Operator partial_transpose(const Operator& rho, std::size_t dim_a, std::size_t dim_b) {
  validate_density(rho, tol::kDensity);
  if (static_cast<std::size_t>(rho.rows()) != dim_a * dim_b) {
    throw std::invalid_argument("partial_transpose: dimA * dimB must equal the operator dimension");
  }
  const auto da = idx(dim_a);
  const auto db = idx(dim_b);
  Operator out(rho.rows(), rho.cols());
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index b2 = 0; b2 < db; ++b2) out(a * db + b, a2 * db + b2) = rho(a * db + b2, a2 * db + b);
  return out;
}

double negativity(const Operator& rho, std::size_t dim_a, std::size_t dim_b) {
  const Operator pt = partial_transpose(rho, dim_a, dim_b);
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  const double trace_norm = es.eigenvalues().cwiseAbs().sum();
  return std::max(0.0, 0.5 * (trace_norm - 1.0));
}

double fidelity(const StateVector& psi, const StateVector& phi) {
  if (psi.dim() != phi.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  return std::min(1.0, std::norm(psi.amplitudes().dot(phi.amplitudes())));
}

}  // namespace nc2ent
