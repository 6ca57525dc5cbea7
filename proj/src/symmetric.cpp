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

#include "nc2ent/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nc2ent/tolerances.hpp"

namespace nc2ent::sym {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void fill_occupations(int levels, int remaining, Occupation& cur, std::vector<Occupation>& out) {
  const auto pos = cur.size();
  if (static_cast<int>(pos) == levels - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    cur.push_back(n);
    fill_occupations(levels, remaining - n, cur, out);
    cur.pop_back();
  }
}

void check_split(int levels, int particles, int nx, int ny) {
  if (nx < 0 || ny < 0 || nx + ny != particles) {
    throw std::invalid_argument("splitting: need N_X + N_Y = N with non-negative parts");
  }
  (void)dicke_dim(levels, particles);
}

}  // namespace

std::size_t dicke_dim(int levels, int particles) {
  if (levels < 2 || levels > kMaxLevels) throw std::invalid_argument("dicke_dim: K must lie in [2, 6]");
  if (particles < 0 || particles > kMaxParticles) throw std::invalid_argument("dicke_dim: N must lie in [0, 12]");
  // binom(N+K-1, K-1), exact in integers at these sizes.
  std::size_t num = 1;
  for (int k = 1; k <= levels - 1; ++k) num = num * static_cast<std::size_t>(particles + k) / static_cast<std::size_t>(k);
  return num;
}

std::vector<Occupation> occupations(int levels, int particles) {
  if (levels < 1 || particles < 0) throw std::invalid_argument("occupations: invalid sizes");
  std::vector<Occupation> out;
  Occupation cur;
  cur.reserve(static_cast<std::size_t>(levels));
  fill_occupations(levels, particles, cur, out);
  return out;
}

double multinomial(const Occupation& occ) {
  int total = 0;
  double denom = 1.0;
  for (int n : occ) {
    total += n;
    denom *= factorial(n);
  }
  return factorial(total) / denom;
}

DickeBasis::DickeBasis(int levels, int particles)
    : levels_(levels), particles_(particles), states_(occupations(levels, particles)) {
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::size_t DickeBasis::index_of(const Occupation& occ) const {
  const auto it = index_.find(occ);
  if (it == index_.end()) throw std::out_of_range("DickeBasis: occupation not in basis");
  return it->second;
}

SuUnitary::SuUnitary(Matrix m) : m_(std::move(m)) {
  if (m_.rows() < 2 || m_.rows() > kMaxLevels) throw std::invalid_argument("SuUnitary: K must lie in [2, 6]");
  if (unitarity_defect(m_) > tol::kNorm) throw std::invalid_argument("SuUnitary: matrix is not unitary");
}

SymmetricState::SymmetricState(int levels, int particles, Vector amplitudes)
    : levels_(levels), particles_(particles), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != dicke_dim(levels, particles)) {
    throw std::invalid_argument("SymmetricState: amplitude count does not match the Dicke dimension");
  }
  if (std::abs(amps_.norm() - 1.0) > tol::kNorm) throw std::invalid_argument("SymmetricState: not normalized");
}

SymmetricState SymmetricState::normalized(int levels, int particles, const Vector& amplitudes) {
  return SymmetricState(levels, particles, StateVector::normalized(amplitudes).amplitudes());
}

SymmetricState coherent_state(const Vector& u, int particles) {
  const int levels = static_cast<int>(u.size());
  const std::size_t dim = dicke_dim(levels, particles);
  if (std::abs(u.norm() - 1.0) > tol::kNorm) throw std::invalid_argument("coherent_state: U|0> must be a unit vector");
  const auto occ = occupations(levels, particles);
  Vector amps(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < occ.size(); ++i) {
    cplx a = std::sqrt(multinomial(occ[i]));
    for (int j = 0; j < levels; ++j) {
      if (occ[i][static_cast<std::size_t>(j)] > 0) a *= std::pow(u(j), occ[i][static_cast<std::size_t>(j)]);
    }
    amps(static_cast<Eigen::Index>(i)) = a;
  }
  return SymmetricState::normalized(levels, particles, amps);
}

SymmetricState coherent_state(const SuUnitary& u, int particles) { return coherent_state(u.single_particle(), particles); }

cplx overlap(const SuUnitary& u, const SuUnitary& v, int particles) {
  if (u.levels() != v.levels()) throw std::invalid_argument("overlap: K mismatch");
  if (particles < 0) throw std::invalid_argument("overlap: N must be non-negative");
  const cplx base = u.single_particle().dot(v.single_particle());
  cplx out = 1.0;
  for (int k = 0; k < particles; ++k) out *= base;
  return out;
}

cplx dicke_inner(const SymmetricState& a, const SymmetricState& b) {
  if (a.levels() != b.levels() || a.particles() != b.particles()) {
    throw std::invalid_argument("dicke_inner: states live in different spaces");
  }
  return a.amplitudes().dot(b.amplitudes());
}

SuUnitary haar_random_su(int levels, Rng& rng) {
  if (levels < 2) throw std::invalid_argument("haar_random_su: K must be at least 2");
  return SuUnitary(haar_unitary(static_cast<std::size_t>(levels), rng));
}

SuUnitary haar_random_su(int levels, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_su(levels, rng);
}

SymmetricState superpose(std::span<const SuUnitary> unitaries, std::span<const cplx> coefficients, int particles) {
  if (unitaries.empty() || unitaries.size() != coefficients.size()) {
    throw std::invalid_argument("superpose: need matching, non-empty unitaries and coefficients");
  }
  const int levels = unitaries.front().levels();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dicke_dim(levels, particles)));
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    if (unitaries[i].levels() != levels) throw std::invalid_argument("superpose: K mismatch");
    v += coefficients[i] * coherent_state(unitaries[i], particles).amplitudes();
  }
  return SymmetricState::normalized(levels, particles, v);
}

Operator splitting_map(int levels, int particles, int nx, int ny) {
  check_split(levels, particles, nx, ny);
  const DickeBasis full(levels, particles);
  const DickeBasis bx(levels, nx);
  const DickeBasis by(levels, ny);
  Operator out = Operator::Zero(static_cast<Eigen::Index>(bx.size() * by.size()),
                                static_cast<Eigen::Index>(full.size()));
  for (std::size_t ix = 0; ix < bx.size(); ++ix) {
    for (std::size_t iy = 0; iy < by.size(); ++iy) {
      Occupation n(static_cast<std::size_t>(levels));
      for (std::size_t j = 0; j < n.size(); ++j) n[j] = bx[ix][j] + by[iy][j];
      const double w = std::sqrt(multinomial(bx[ix]) * multinomial(by[iy]) / multinomial(n));
      out(static_cast<Eigen::Index>(ix * by.size() + iy), static_cast<Eigen::Index>(full.index_of(n))) = w;
    }
  }
  return out;
}

Operator splitting_isometry(int levels, int particles, int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("splitting_isometry: N_X and N_Y must be positive");
  return splitting_map(levels, particles, nx, ny);
}

StateVector split_state(const SymmetricState& psi, int nx, int ny) {
  const Operator lam = splitting_map(psi.levels(), psi.particles(), nx, ny);
  return StateVector::normalized(lam * psi.amplitudes());
}

Theorem3Report verify_theorem3_mixed(int levels, int particles, int nx, int ny, std::size_t samples,
                                     std::uint64_t seed) {
  if (dicke_dim(levels, particles) > 50) throw std::invalid_argument("verify_theorem3_mixed: instance too large");
  const Operator lam = splitting_isometry(levels, particles, nx, ny);
  const std::size_t dx = dicke_dim(levels, nx);
  const std::size_t dy = dicke_dim(levels, ny);

  Theorem3Report r;
  r.samples = samples;
  r.min_nonclassical_schmidt_rank = samples == 0 ? 0 : SIZE_MAX;
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(substream_seed(seed, s));
    std::uniform_int_distribution<int> terms_dist(1, 3);
    std::uniform_real_distribution<double> weight_dist(0.05, 1.0);

    // (a) mixtures of coherent projectors.
    const int terms = terms_dist(rng);
    std::vector<double> w(static_cast<std::size_t>(terms));
    std::vector<SuUnitary> us;
    for (int k = 0; k < terms; ++k) {
      w[static_cast<std::size_t>(k)] = weight_dist(rng);
      us.push_back(haar_random_su(levels, rng));
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    Operator rho = Operator::Zero(lam.cols(), lam.cols());
    Operator decomposition = Operator::Zero(lam.rows(), lam.rows());
    for (int k = 0; k < terms; ++k) {
      const double p = w[static_cast<std::size_t>(k)] / total;
      rho += p * coherent_state(us[static_cast<std::size_t>(k)], particles).as_state().projector();
      const Vector prod = kron(coherent_state(us[static_cast<std::size_t>(k)], nx).amplitudes(),
                               coherent_state(us[static_cast<std::size_t>(k)], ny).amplitudes());
      decomposition += p * prod * prod.adjoint();
    }
    const Operator out = lam * rho * lam.adjoint();
    r.max_classical_negativity = std::max(r.max_classical_negativity, negativity(out, dx, dy));
    r.max_decomposition_error = std::max(r.max_decomposition_error, max_abs(out - decomposition));

    // (c) pure coherent input.
    const SymmetricState coh = coherent_state(us.front(), particles);
    r.max_classical_entropy =
        std::max(r.max_classical_entropy, entanglement_entropy(schmidt_decompose(split_state(coh, nx, ny), dx, dy)));

    // (b) two-term superposition with the reference coherent state.
    const SuUnitary ident(Matrix::Identity(levels, levels));
    const SuUnitary other = haar_random_su(levels, rng);
    const std::vector<SuUnitary> pair{ident, other};
    const std::vector<cplx> coeffs{1.0, 1.0};
    const StateVector split = split_state(superpose(pair, coeffs, particles), nx, ny);
    const SchmidtData sd = schmidt_decompose(split, dx, dy);
    r.min_nonclassical_entropy = std::min(r.min_nonclassical_entropy, entanglement_entropy(sd));
    r.min_nonclassical_negativity = std::min(r.min_nonclassical_negativity, negativity(split.projector(), dx, dy));
    r.min_nonclassical_schmidt_rank = std::min(r.min_nonclassical_schmidt_rank, sd.rank);
  }
  r.passed = r.max_classical_negativity <= tol::kDetect && r.max_decomposition_error <= tol::kDetect &&
             r.max_classical_entropy <= tol::kDetect &&
             (samples == 0 || (r.min_nonclassical_entropy > 1e-8 && r.min_nonclassical_negativity > tol::kDetect &&
                               r.min_nonclassical_schmidt_rank == 2));
  return r;
}

}  // namespace nc2ent::sym
