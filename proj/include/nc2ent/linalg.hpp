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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nc2ent {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Dense operator. Shape is the only invariant; unitarity or Hermiticity is
/// checked by the operations that need it.
using Operator = Eigen::MatrixXcd;

/// Thrown when two state families have different Gram matrices, so no unitary
/// can map one onto the other.
class GramMismatch : public std::runtime_error {
 public:
  GramMismatch(const std::string& what, double deviation)
      : std::runtime_error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// Unit vector in a finite-dimensional Hilbert space.
///
/// Construction rejects vectors whose norm differs from one by more than
/// tol::kNorm. Use `normalized` to rescale explicitly.
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);

  static StateVector normalized(const Vector& amplitudes);
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  /// |psi><psi|
  Operator projector() const { return amps_ * amps_.adjoint(); }

 private:
  Vector amps_;
};

/// Kronecker product |a> (x) |b>, index a * dim(b) + b.
StateVector kron(const StateVector& a, const StateVector& b);
Vector kron(const Vector& a, const Vector& b);
Operator kron(const Operator& a, const Operator& b);

/// Hermitian positive-semidefinite matrix with unit diagonal.
class GramMatrix {
 public:
  /// Validates Hermiticity, unit diagonal and PSD; throws std::invalid_argument.
  explicit GramMatrix(Matrix entries);

  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  /// Smallest eigenvalue (the matrix is Hermitian).
  double min_eigenvalue() const;

 private:
  Matrix m_;
};

struct SchmidtData {
  std::vector<double> coefficients;  // descending
  Matrix left_vectors;               // columns, dimA x k
  Matrix right_vectors;              // columns, dimB x k
  std::size_t rank = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
};

GramMatrix gram_of(std::span<const StateVector> states);

/// Entrywise (Schur) product.
GramMatrix hadamard(const GramMatrix& g1, const GramMatrix& g2);

/// n vectors of dimension n whose Gram matrix is g: the columns of
/// Lambda^{1/2} V^dagger for g = V Lambda V^dagger.
std::vector<StateVector> factor_gram(const GramMatrix& g);

/// Unitary mapping from[i] to to[i] for every i. If `to` lives in a larger
/// space, `from` is embedded by zero padding (the first from.dim() coordinates).
/// Throws GramMismatch when the Gram matrices differ by more than tol::kGramMatch.
Operator synthesize_unitary(std::span<const StateVector> from, std::span<const StateVector> to);

SchmidtData schmidt_decompose(const StateVector& psi, std::size_t dim_a, std::size_t dim_b);

/// Entropy of entanglement in ebits.
double entanglement_entropy(const SchmidtData& sd);

/// Throws std::invalid_argument unless rho is Hermitian, PSD and has unit trace.
void validate_density(const Operator& rho, double tolerance = 1e-10);

/// Partial transpose on the second factor.
Operator partial_transpose(const Operator& rho, std::size_t dim_a, std::size_t dim_b);

/// (||rho^{T_B}||_1 - 1) / 2, clamped at zero.
double negativity(const Operator& rho, std::size_t dim_a, std::size_t dim_b);

double fidelity(const StateVector& psi, const StateVector& phi);

/// max_ij |U^dagger U - I|_ij
double unitarity_defect(const Operator& u);

double max_abs(const Matrix& m);

/// Columns completing `frame` (orthonormal columns) to an orthonormal basis of
/// C^dim, obtained by Gram-Schmidt over the standard basis in index order.
Matrix orthonormal_complement(const Matrix& frame);

}  // namespace nc2ent
