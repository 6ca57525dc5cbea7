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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nc2ent/discrete.hpp"

/// Two-state generalized CNOT (GCNOT) family.
///
/// Classical states |c_0/1> = cos(theta/2)|0> +- sin(theta/2)|1> with overlap
/// cos(theta). The conversion sends |c_i> to |d_i>|e_i> with <d_0|d_1> = mu and
/// <e_0|e_1> = cos(theta) / mu, where mu = 1/(1+eps) is the compactified
/// splitting parameter (mu -> 0 is the controlled-displacement limit).
namespace nc2ent::gcnot {

struct Params {
  double theta;
  double mu;

  static Params from_epsilon(double theta, double epsilon) { return {theta, 1.0 / (1.0 + epsilon)}; }
  double epsilon() const { return 1.0 / mu - 1.0; }
  /// (1+eps)|cos theta| <= 1 with mu in (0, 1] and theta in (0, pi).
  bool feasible() const;
};

/// Throws std::invalid_argument unless 0 < theta < pi.
ClassicalSet classical_pair(double theta);

/// Entropy (ebits) of the converted input, via the two-term expansion
/// input = a_0|c_0> + a_1|c_1> and an SVD of the 2x2 output coefficients.
/// Throws std::invalid_argument for infeasible parameters.
double output_entanglement(const Params& p, const StateVector& input);

/// Same quantity through the full discrete conversion (Gram splitting plus
/// unitary synthesis). Requires a strictly feasible point.
double output_entanglement_via_conversion(const Params& p, const StateVector& input);

struct Optimum {
  double mu;
  double epsilon;
  double ebits;
};

/// Maximizes output_entanglement over feasible mu: 512-point grid scan followed
/// by golden-section refinement to 1e-8 in mu.
Optimum optimal_epsilon(double theta, const StateVector& input);

struct SweepRow {
  double theta;
  double mu;
  double epsilon;
  double ebits;
};

struct Surface {
  std::vector<SweepRow> rows;
  /// (theta, mu) grid cells with (1+eps)|cos theta| > 1; left out of `rows`.
  std::vector<std::pair<double, double>> infeasible;
};

/// Output entanglement over a (theta, mu) grid. With include_optimum, each theta
/// row also gets its optimal (mu, eps) point, inserted in mu order.
/// OpenMP-parallel over theta rows.
Surface sweep_surface(std::span<const double> theta_grid, std::span<const double> mu_grid, const StateVector& input,
                      bool include_optimum = true);
/// Serial reference for sweep_surface; identical output.
Surface sweep_surface_serial(std::span<const double> theta_grid, std::span<const double> mu_grid,
                             const StateVector& input, bool include_optimum = true);

struct ProbeReport {
  double theta = 0.0;
  double mu = 0.0;
  double epsilon = 0.0;
  std::size_t samples = 0;
  /// Samples on the real great circle cos(phi/2)|0> + sin(phi/2)|1> reaching
  /// at least 1 - 1e-6 ebits.
  std::size_t maximal_samples = 0;
  /// Circularly contiguous runs of maximal samples (distinct input rays).
  std::size_t maximal_directions = 0;
  std::vector<double> maximal_angles;
  double ebits_zero = 0.0;
  double ebits_one = 0.0;
};

inline constexpr double kMaximalThreshold = 1.0 - 1e-6;

/// Great-circle scan of the conversion at (theta, mu).
ProbeReport probe_conversion(double theta, double mu, std::size_t samples = 1024);

/// Scan at the optimal eps for |0> (theta > pi/2) or |1> (theta < pi/2).
/// Throws std::invalid_argument at theta = pi/2.
ProbeReport cnot_equivalence_probe(double theta, std::size_t samples = 1024);

/// <alpha|beta> for optical coherent states.
cplx coherent_overlap(cplx alpha, cplx beta);

struct BeamsplitterParams {
  double x;  // |r|^2
  double y;  // |t|^2
};

/// Beamsplitter equivalent of the GCNOT with parameter eps on two coherent
/// states with real overlap in (0, 1): overlap^x = (1+eps) overlap and
/// overlap^y = 1/(1+eps). Requires 1/(1+eps) >= overlap.
BeamsplitterParams beamsplitter_params(double overlap, double epsilon);

}  // namespace nc2ent::gcnot
