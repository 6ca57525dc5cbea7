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
#include <map>
#include <span>
#include <vector>

#include "nc2ent/linalg.hpp"
#include "nc2ent/random.hpp"

/// Symmetric SU(K) coherent states |U;N> = (U|0>)^{(x)N}, represented in the
/// Dicke (occupation-number) basis of Sym^N(C^K).
namespace nc2ent::sym {

inline constexpr int kMaxLevels = 6;
inline constexpr int kMaxParticles = 12;

/// Occupation vector (n_0, ..., n_{K-1}).
using Occupation = std::vector<int>;

/// binom(N+K-1, K-1). Throws std::invalid_argument outside K in [2, 6], N in [0, 12].
std::size_t dicke_dim(int levels, int particles);

/// Compositions of N into K parts, reverse-lexicographic: (N,0,..,0) first.
/// No size caps; callers enforce their own.
std::vector<Occupation> occupations(int levels, int particles);

/// N! / prod n_j!
double multinomial(const Occupation& occ);

/// Ordered Dicke basis with reverse lookup.
class DickeBasis {
 public:
  DickeBasis(int levels, int particles);

  int levels() const { return levels_; }
  int particles() const { return particles_; }
  std::size_t size() const { return states_.size(); }
  const Occupation& operator[](std::size_t i) const { return states_[i]; }
  std::size_t index_of(const Occupation& occ) const;

 private:
  int levels_;
  int particles_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
};

/// Unitary on C^K (global phase irrelevant; U(K) elements are accepted).
class SuUnitary {
 public:
  explicit SuUnitary(Matrix m);

  int levels() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  /// U|0>
  Vector single_particle() const { return m_.col(0); }

 private:
  Matrix m_;
};

/// Unit vector on Sym^N(C^K) in Dicke order.
class SymmetricState {
 public:
  SymmetricState(int levels, int particles, Vector amplitudes);
  static SymmetricState normalized(int levels, int particles, const Vector& amplitudes);

  int levels() const { return levels_; }
  int particles() const { return particles_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  StateVector as_state() const { return StateVector(amps_); }

 private:
  int levels_;
  int particles_;
  Vector amps_;
};

SymmetricState coherent_state(const SuUnitary& u, int particles);
/// Coherent state from the single-particle vector U|0> (must be a unit vector).
SymmetricState coherent_state(const Vector& single_particle, int particles);

/// <U;N|V;N> = <0|U^dagger V|0>^N
cplx overlap(const SuUnitary& u, const SuUnitary& v, int particles);

/// Inner product of two states in the Dicke basis.
cplx dicke_inner(const SymmetricState& a, const SymmetricState& b);

SuUnitary haar_random_su(int levels, std::uint64_t seed);
SuUnitary haar_random_su(int levels, Rng& rng);

/// Normalized finite superposition sum_i c_i |U_i;N>.
SymmetricState superpose(std::span<const SuUnitary> unitaries, std::span<const cplx> coefficients, int particles);

/// Isometry Sym^N(C^K) -> Sym^{N_X}(C^K) (x) Sym^{N_Y}(C^K) with
/// |U;N> -> |U;N_X> (x) |U;N_Y>. Output index is iX * dim(N_Y) + iY.
/// Requires N_X, N_Y >= 1 and N_X + N_Y = N.
Operator splitting_isometry(int levels, int particles, int nx, int ny);

/// splitting_isometry without the N_X, N_Y >= 1 restriction (a zero-particle
/// factor is the one-dimensional vacuum).
Operator splitting_map(int levels, int particles, int nx, int ny);

/// Lambda_{N_X,N_Y} |psi>, as a bipartite state of dims (dicke(N_X), dicke(N_Y)).
StateVector split_state(const SymmetricState& psi, int nx, int ny);

struct Theorem3Report {
  std::size_t samples = 0;
  /// Convex mixtures of coherent projectors.
  double max_classical_negativity = 0.0;
  double max_decomposition_error = 0.0;
  /// Pure coherent inputs.
  double max_classical_entropy = 0.0;
  /// (|I;N> + |U;N>)/norm inputs.
  double min_nonclassical_entropy = INFINITY;
  double min_nonclassical_negativity = INFINITY;
  std::size_t min_nonclassical_schmidt_rank = 0;
  bool passed = false;
};

/// Mixed-state faithfulness checks for Lambda_{N_X,N_Y}. Requires
/// dicke_dim(K, N) <= 50.
Theorem3Report verify_theorem3_mixed(int levels, int particles, int nx, int ny, std::size_t samples,
                                     std::uint64_t seed);

}  // namespace nc2ent::sym
