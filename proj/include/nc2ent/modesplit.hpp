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
#include <utility>
#include <vector>

#include "nc2ent/symmetric.hpp"

/// Two-mode mode-splitting protocol: tunneling between modes A and B,
/// particle-number measurement, post-selection, repeat until success.
namespace nc2ent::modesplit {

/// N bosons with K internal levels shared between modes A and B. Sector N_A
/// holds a dicke(K, N_A) x dicke(K, N - N_A) block of amplitudes on
/// Sym^{N_A}(C^K) (x) Sym^{N_B}(C^K).
class TwoModeState {
 public:
  /// Validates block shapes and unit total norm.
  TwoModeState(int levels, int particles, std::vector<Matrix> sectors);

  int levels() const { return levels_; }
  int particles() const { return particles_; }
  /// Block for N_A particles in mode A.
  const Matrix& sector(int na) const { return sectors_.at(static_cast<std::size_t>(na)); }
  const std::vector<Matrix>& sectors() const { return sectors_; }
  double norm() const;

 private:
  int levels_;
  int particles_;
  std::vector<Matrix> sectors_;
};

/// Beamsplitter W = ((r, t), (t*, -r*)) acting as a^dagger -> r a^dagger + t b^dagger,
/// b^dagger -> t* a^dagger - r* b^dagger on every internal level.
struct Tunneling {
  cplx r;
  cplx t;

  /// r real, t = sqrt(1 - r^2) e^{i phi}.
  static Tunneling from_phase(double r, double phi = 0.0);
};

struct ProtocolConfig {
  Tunneling tunneling;
  int nx;
  int ny;
  std::size_t max_rounds;
  std::uint64_t seed;
};

/// Throws std::invalid_argument unless |r|^2 + |t|^2 = 1 (1e-12) and |r| is not 0 or 1.
void validate(const Tunneling& w);

/// All amplitude in sector (N, 0); mode B starts empty.
TwoModeState inject(const sym::SymmetricState& input);

/// Collective single-particle rotation, applied in second quantization per
/// internal level. Norm preserving.
TwoModeState apply_tunneling(const TwoModeState& state, const Tunneling& w);

/// (N_A, N_B) -> squared block norm.
std::map<std::pair<int, int>, double> sector_probabilities(const TwoModeState& state);

struct SectorProjection {
  StateVector state;  // index iA * dim_b + iB
  std::size_t dim_a;
  std::size_t dim_b;
  double probability;
};

/// Normalized block of sector (N_A, N_B). Throws std::invalid_argument for a
/// sector with probability <= 1e-15.
SectorProjection project_sector(const TwoModeState& state, int na, int nb);

/// Post-measurement two-mode state: only the selected sector, renormalized.
TwoModeState collapse(const TwoModeState& state, int na);

struct RoundRecord {
  std::size_t round;  // 1-based
  int na;
  int nb;
  double probability;
  /// Fidelity of the post-selected block with Lambda_{N_A,N_B}|psi_in>.
  double fidelity;
};

struct ProtocolTrace {
  bool success = false;
  std::size_t rounds = 0;
  std::vector<RoundRecord> records;
  /// Last post-measurement state (the injected input if no round ran).
  TwoModeState final_state;
  /// Fidelity of the target block with Lambda_{N_X,N_Y}|psi_in> (NaN on failure).
  double fidelity;
};

/// Repeat-until-success loop: tunnel, sample a sector by inverse CDF, stop on
/// the target, otherwise tunnel the post-measurement state again. Fails after
/// max_rounds (max_rounds = 0 fails immediately).
ProtocolTrace run_protocol(const sym::SymmetricState& input, const ProtocolConfig& cfg);

struct BatchSummary {
  std::size_t runs = 0;
  std::size_t successes = 0;
  std::size_t first_round_successes = 0;
  double mean_rounds = 0.0;  // over successful runs
  double min_fidelity = 1.0;
  double mean_fidelity = 0.0;
};

struct Batch {
  std::vector<ProtocolTrace> traces;
  BatchSummary summary;
};

/// Independent runs seeded by substream_seed(cfg.seed, run). OpenMP-parallel over runs.
Batch run_batch(const sym::SymmetricState& input, const ProtocolConfig& cfg, std::size_t runs);
/// Serial reference for run_batch; identical output.
Batch run_batch_serial(const sym::SymmetricState& input, const ProtocolConfig& cfg, std::size_t runs);

/// |C_{N_A,N_B}|^2 = binom(N, N_A) |r|^{2 N_A} |t|^{2 N_B}.
double sector_weight(int particles, int na, const Tunneling& w);

}  // namespace nc2ent::modesplit
