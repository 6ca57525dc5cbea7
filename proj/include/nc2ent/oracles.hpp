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

#include <span>
#include <vector>

#include "nc2ent/linalg.hpp"
#include "nc2ent/modesplit.hpp"
#include "nc2ent/symmetric.hpp"

// Independent reference computations used to cross-check the library.
namespace nc2ent::oracle {

/// v^{(x)N} in first quantization, index sum_f i_f K^{N-1-f}.
Vector tensor_power(const Vector& v, int particles);

/// Symmetric Dicke state vector in first quantization (K^N entries).
Vector dicke_tensor(int levels, const sym::Occupation& occ);

/// Amplitudes of a first-quantized vector on the reverse-lex Dicke basis.
Vector project_to_dicke(const Vector& tensor, int levels, int particles);

/// Inverse of project_to_dicke on the symmetric subspace.
Vector embed_symmetric(const Vector& dicke, int levels, int particles);

/// Lambda_{N_X,N_Y} by reshaping the tensor vector and projecting both factors.
Vector split_first_quantized(const Vector& dicke, int levels, int particles, int nx, int ny);

/// Apply a single-particle operator to every factor of a tensor vector.
Vector apply_each_factor(const Matrix& op, const Vector& tensor, int particles);

/// Tunneling in first quantization on C^{2K} (index mode * K + level), with
/// mode B initially empty. Returns sector blocks.
std::vector<Matrix> tunneling_first_quantized(const Vector& dicke, int levels, int particles,
                                              const modesplit::Tunneling& w);

/// Numerical rank of the reshaped dim_a x dim_b coefficient matrix via
/// column-pivoted QR, relative threshold 1e-10.
std::size_t schmidt_rank_qr(const Vector& psi, std::size_t dim_a, std::size_t dim_b);

/// Entrywise inner products <s_i|s_j> by explicit summation.
Matrix gram_direct(std::span<const StateVector> states);

/// lambda_min / (1 - lambda_min); infinity when lambda_min >= 1.
double epsilon_max_closed(double lambda_min);

/// GCNOT: 1 / |cos theta| - 1.
double gcnot_epsilon_max(double theta);

/// GCNOT: mu at which input |0> (theta > pi/2) or |1> (theta < pi/2) reaches one ebit.
double gcnot_optimal_mu(double theta);

/// GCNOT output entropy from det(rho_A) of a two-term state with overlaps
/// mu and cos(theta)/mu.
double gcnot_entropy_closed(double theta, double mu, const Vector& input);

}  // namespace nc2ent::oracle
