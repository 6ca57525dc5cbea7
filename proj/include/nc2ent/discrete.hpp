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

#include <cstdint>
#include <optional>
#include <vector>

#include "nc2ent/linalg.hpp"

namespace nc2ent {

/// Thrown when a candidate classical family is not linearly independent.
class DependentSetError : public std::invalid_argument {
 public:
  DependentSetError(const std::string& what, double min_eigenvalue)
      : std::invalid_argument(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// D linearly independent pure states spanning C^D.
class ClassicalSet {
 public:
  explicit ClassicalSet(std::vector<StateVector> states);

  std::size_t dim() const { return states_.size(); }
  const std::vector<StateVector>& states() const { return states_; }
  const StateVector& operator[](std::size_t i) const { return states_[i]; }
  const GramMatrix& gram() const { return gram_; }
  /// Classical states as the columns of a D x D matrix.
  const Matrix& columns() const { return columns_; }

 private:
  std::vector<StateVector> states_;
  GramMatrix gram_;
  Matrix columns_;
};

/// Splitting G^(c) = gram_d o gram_e with gram_d = B(1/(1+eps)) and
/// gram_e = G^(c) o B(1+eps).
struct SplitSpec {
  double epsilon;
  GramMatrix gram_d;
  GramMatrix gram_e;
  std::vector<StateVector> d_states;
  std::vector<StateVector> e_states;
};

/// Conversion unitary on C^D (x) C^D: |c_i> (x) |ref>  ->  |d_i> (x) |e_i>.
struct Conversion {
  Operator unitary;
  StateVector reference;
  double epsilon;
  std::vector<StateVector> d_states;
  std::vector<StateVector> e_states;

  std::size_t dim() const { return reference.dim(); }
  /// |psi> (x) |ref>
  StateVector embed(const StateVector& psi) const;
};

/// Unit diagonal, every off-diagonal entry equal to lambda. Requires 0 <= lambda <= 1.
GramMatrix djokovic_b(double lambda, std::size_t dim);

/// G^(c) o B(1+eps) as a plain matrix (it need not be PSD).
Matrix scaled_overlaps(const ClassicalSet& cs, double epsilon);

/// Supremum of eps > 0 with G^(c) o B(1+eps) positive definite, by bisection on
/// the sign of the smallest eigenvalue (relative tolerance 1e-10). Returns
/// +infinity if the matrix is still PD at eps = 1e6.
double epsilon_max(const ClassicalSet& cs);

/// eps_max / 2, or 1.0 when eps_max is infinite.
double default_epsilon(const ClassicalSet& cs);

/// Throws std::invalid_argument if eps <= 0 or G^(c) o B(1+eps) is not PD.
SplitSpec make_split(const ClassicalSet& cs, double epsilon);

Conversion build_conversion(const ClassicalSet& cs, const SplitSpec& split, const StateVector& reference);
/// Reference defaults to the first classical state.
Conversion build_conversion(const ClassicalSet& cs, const SplitSpec& split);
/// make_split at `epsilon` (default_epsilon when empty) followed by build_conversion.
Conversion make_conversion(const ClassicalSet& cs, std::optional<double> epsilon = std::nullopt);

/// Unique expansion coefficients of psi in the classical basis.
Vector classical_coefficients(const StateVector& psi, const ClassicalSet& cs);

/// Number of expansion coefficients above 1e-10 times the largest one.
std::size_t c_rank(const StateVector& psi, const ClassicalSet& cs);

StateVector convert_state(const Conversion& conv, const StateVector& psi);
Operator convert_density(const Conversion& conv, const Operator& rho);

struct ProductTerm {
  double weight;
  StateVector left;
  StateVector right;
};

/// Explicit separable decomposition of the image of sum_k w_k |c_{i_k}><c_{i_k}|.
std::vector<ProductTerm> classical_mixture_image(const Conversion& conv, std::span<const double> weights,
                                                 std::span<const std::size_t> indices);
Operator assemble(std::span<const ProductTerm> terms);

struct Theorem2Report {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  /// Smallest retained Schmidt coefficient relative to the largest, over all trials.
  double min_retained_ratio = 1.0;
  /// Largest discarded relative Schmidt coefficient (0 if none).
  double max_discarded_ratio = 0.0;
  /// Smallest output entropy among inputs with C-rank >= 2 (+inf if none).
  double min_nonclassical_entropy = INFINITY;
};

/// Random superpositions with support size 1 + trial % D (per-trial substreams
/// of `seed`); checks Schmidt rank of the output against the C-rank.
/// OpenMP-parallel.
Theorem2Report verify_theorem2(const ClassicalSet& cs, const Conversion& conv, std::size_t trials,
                               std::uint64_t seed);
/// Serial reference for verify_theorem2; produces identical reports.
Theorem2Report verify_theorem2_serial(const ClassicalSet& cs, const Conversion& conv, std::size_t trials,
                                      std::uint64_t seed);

}  // namespace nc2ent
