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
#include <string>

#include "nc2ent/discrete.hpp"

namespace nc2ent::witness {

/// Hermitian operator on a bipartite (or single) space.
class Witness {
 public:
  /// Validates Hermiticity within 1e-12, then symmetrizes.
  Witness(Operator op, std::string label);

  const Operator& op() const { return op_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return static_cast<std::size_t>(op_.rows()); }

 private:
  Operator op_;
  std::string label_;
};

/// W = lambda_1^2 I - |phi><phi| with lambda_1 the largest Schmidt coefficient of phi.
Witness swap_style_witness(std::size_t dim_a, std::size_t dim_b, const StateVector& phi);

/// W' = Lambda^dagger W Lambda on input (x) ancilla.
Operator pull_back(const Witness& w, const Conversion& conv);

/// W~_{ij} = sum_{kl} conj(ref_k) W'_{(i,k),(j,l)} ref_l.
Witness restrict_to_reference(const Operator& wp, const StateVector& reference);

struct Detection {
  double value;
  bool detected;  // value < -1e-10
};

/// Tr(W rho) for a validated density matrix.
Detection detect(const Witness& w, const Operator& rho);

/// Tr(W rho) for a pure state.
Detection detect(const Witness& w, const StateVector& psi);

/// Minimum of Tr(W sigma) over random product pure states sigma, one
/// substream per sample. OpenMP-parallel.
double min_product_expectation(const Witness& w, std::size_t dim_a, std::size_t dim_b, std::size_t samples,
                               std::uint64_t seed);
/// Serial reference for min_product_expectation.
double min_product_expectation_serial(const Witness& w, std::size_t dim_a, std::size_t dim_b, std::size_t samples,
                                      std::uint64_t seed);

/// Full chain for a conversion: W from the converted target, then pulled back and restricted.
struct Pipeline {
  Witness entanglement;      // W on the output space
  Witness non_classicality;  // W~ on the input space
};

Pipeline non_classicality_witness(const Conversion& conv, const StateVector& target);

/// min_i Tr(W~ |c_i><c_i|) over a classical set.
double min_classical_expectation(const Witness& wt, const ClassicalSet& cs);

}  // namespace nc2ent::witness
