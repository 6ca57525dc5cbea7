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

#include "nc2ent/modesplit.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "nc2ent/random.hpp"
#include "nc2ent/tolerances.hpp"

namespace nc2ent::modesplit {

namespace {

constexpr double kMinSectorProbability = 1e-15;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

cplx ipow(cplx z, int n) {
  cplx out = 1.0;
  for (int k = 0; k < n; ++k) out *= z;
  return out;
}

/// Coefficients of a^k b^{p+q-k} in (r a + t b)^p (t* a - r* b)^q.
class RotationPolynomials {
 public:
  RotationPolynomials(const Tunneling& w, int particles) : n_(particles + 1), table_(n_ * n_) {
    for (int p = 0; p < n_; ++p) {
      for (int q = 0; p + q < n_; ++q) {
        auto& poly = table_[static_cast<std::size_t>(p * n_ + q)];
        poly.assign(static_cast<std::size_t>(p + q + 1), 0.0);
        for (int s = 0; s <= p; ++s) {
          const cplx from_a = binomial(p, s) * ipow(w.r, s) * ipow(w.t, p - s);
          for (int u = 0; u <= q; ++u) {
            const cplx from_b = binomial(q, u) * ipow(std::conj(w.t), u) * ipow(-std::conj(w.r), q - u);
            poly[static_cast<std::size_t>(s + u)] += from_a * from_b;
          }
        }
      }
    }
  }

  const std::vector<cplx>& operator()(int p, int q) const { return table_[static_cast<std::size_t>(p * n_ + q)]; }

 private:
  int n_;
  std::vector<std::vector<cplx>> table_;
};

std::vector<sym::DickeBasis> sector_bases(int levels, int particles) {
  std::vector<sym::DickeBasis> bases;
  bases.reserve(static_cast<std::size_t>(particles + 1));
  for (int n = 0; n <= particles; ++n) bases.emplace_back(levels, n);
  return bases;
}

std::vector<Matrix> zero_sectors(const std::vector<sym::DickeBasis>& bases, int particles) {
  std::vector<Matrix> out;
  for (int na = 0; na <= particles; ++na) {
    out.push_back(Matrix::Zero(static_cast<Eigen::Index>(bases[static_cast<std::size_t>(na)].size()),
                               static_cast<Eigen::Index>(bases[static_cast<std::size_t>(particles - na)].size())));
  }
  return out;
}

double target_fidelity(const Matrix& block, const sym::SymmetricState& input, int na, int nb) {
  const Operator lam = sym::splitting_map(input.levels(), input.particles(), na, nb);
  const Vector expected = lam * input.amplitudes();
  const double en = expected.norm();
  const double bn = block.norm();
  if (!(en > 0.0) || !(bn > 0.0)) return 0.0;
  // block(iA, iB) flattened row-major to match iA * dim_b + iB.
  Vector flat(block.size());
  for (Eigen::Index a = 0; a < block.rows(); ++a) flat.segment(a * block.cols(), block.cols()) = block.row(a).transpose();
  return std::min(1.0, std::norm(expected.dot(flat)) / (en * en * bn * bn));
}

BatchSummary summarize(const std::vector<ProtocolTrace>& traces) {
  BatchSummary s;
  s.runs = traces.size();
  double rounds = 0.0;
  double fid = 0.0;
  for (const auto& t : traces) {
    if (!t.records.empty() && t.records.front().round == 1 && t.success && t.rounds == 1) ++s.first_round_successes;
    if (!t.success) continue;
    ++s.successes;
    rounds += static_cast<double>(t.rounds);
    fid += t.fidelity;
    s.min_fidelity = std::min(s.min_fidelity, t.fidelity);
  }
  if (s.successes > 0) {
    s.mean_rounds = rounds / static_cast<double>(s.successes);
    s.mean_fidelity = fid / static_cast<double>(s.successes);
  }
  return s;
}

}  // namespace

TwoModeState::TwoModeState(int levels, int particles, std::vector<Matrix> sectors)
    : levels_(levels), particles_(particles), sectors_(std::move(sectors)) {
  if (levels < 1 || particles < 0 || sectors_.size() != static_cast<std::size_t>(particles + 1)) {
    throw std::invalid_argument("TwoModeState: wrong number of sectors");
  }
  for (int na = 0; na <= particles; ++na) {
    const auto rows = sym::occupations(levels, na).size();
    const auto cols = sym::occupations(levels, particles - na).size();
    const Matrix& b = sectors_[static_cast<std::size_t>(na)];
    if (static_cast<std::size_t>(b.rows()) != rows || static_cast<std::size_t>(b.cols()) != cols) {
      throw std::invalid_argument("TwoModeState: sector block has the wrong shape");
    }
  }
  if (std::abs(norm() - 1.0) > tol::kNorm) throw std::invalid_argument("TwoModeState: not normalized");
}

double TwoModeState::norm() const {
  double sq = 0.0;
  for (const auto& b : sectors_) sq += b.squaredNorm();
  return std::sqrt(sq);
}

Tunneling Tunneling::from_phase(double r, double phi) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("Tunneling: r must lie in [0, 1]");
  return {cplx(r, 0.0), std::polar(std::sqrt(1.0 - r * r), phi)};
}

void validate(const Tunneling& w) {
  const double total = std::norm(w.r) + std::norm(w.t);
  if (std::abs(total - 1.0) > tol::kNorm) {
    std::ostringstream os;
    os << "tunneling: |r|^2 + |t|^2 = " << total << ", expected 1";
    throw std::invalid_argument(os.str());
  }
  if (std::abs(w.r) < tol::kNorm || std::abs(w.t) < tol::kNorm) {
    throw std::invalid_argument("tunneling: |r| must differ from 0 and 1");
  }
}

double sector_weight(int particles, int na, const Tunneling& w) {
  return binomial(particles, na) * std::pow(std::norm(w.r), na) * std::pow(std::norm(w.t), particles - na);
}

TwoModeState inject(const sym::SymmetricState& input) {
  const int n = input.particles();
  auto sectors = zero_sectors(sector_bases(input.levels(), n), n);
  sectors[static_cast<std::size_t>(n)].col(0) = input.amplitudes();
  return TwoModeState(input.levels(), n, std::move(sectors));
}

TwoModeState apply_tunneling(const TwoModeState& state, const Tunneling& w) {
  if (std::abs(std::norm(w.r) + std::norm(w.t) - 1.0) > tol::kNorm) {
    throw std::invalid_argument("apply_tunneling: |r|^2 + |t|^2 must equal 1");
  }
  const int levels = state.levels();
  const int n = state.particles();
  const auto bases = sector_bases(levels, n);
  const RotationPolynomials polys(w, n);
  auto out = zero_sectors(bases, n);

  sym::Occupation occ_a(static_cast<std::size_t>(levels));
  sym::Occupation occ_b(static_cast<std::size_t>(levels));
  std::vector<int> k(static_cast<std::size_t>(levels));
  for (int na = 0; na <= n; ++na) {
    const auto& ba = bases[static_cast<std::size_t>(na)];
    const auto& bb = bases[static_cast<std::size_t>(n - na)];
    const Matrix& block = state.sector(na);
    for (std::size_t ia = 0; ia < ba.size(); ++ia) {
      for (std::size_t ib = 0; ib < bb.size(); ++ib) {
        const cplx c = block(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib));
        if (c == cplx(0.0)) continue;
        const auto& p = ba[ia];
        const auto& q = bb[ib];
        double in_norm = 1.0;
        for (int j = 0; j < levels; ++j) in_norm *= factorial(p[static_cast<std::size_t>(j)]) * factorial(q[static_cast<std::size_t>(j)]);
        const cplx scale = c / std::sqrt(in_norm);
        // Odometer over k_j in [0, p_j + q_j].
        std::fill(k.begin(), k.end(), 0);
        while (true) {
          cplx amp = scale;
          double out_norm = 1.0;
          int out_na = 0;
          for (int j = 0; j < levels; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const int total = p[jj] + q[jj];
            amp *= polys(p[jj], q[jj])[static_cast<std::size_t>(k[jj])];
            occ_a[jj] = k[jj];
            occ_b[jj] = total - k[jj];
            out_norm *= factorial(occ_a[jj]) * factorial(occ_b[jj]);
            out_na += k[jj];
          }
          if (amp != cplx(0.0)) {
            const auto oa = bases[static_cast<std::size_t>(out_na)].index_of(occ_a);
            const auto ob = bases[static_cast<std::size_t>(n - out_na)].index_of(occ_b);
            out[static_cast<std::size_t>(out_na)](static_cast<Eigen::Index>(oa), static_cast<Eigen::Index>(ob)) +=
                amp * std::sqrt(out_norm);
          }
          int j = 0;
          while (j < levels) {
            const auto jj = static_cast<std::size_t>(j);
            if (k[jj] < p[jj] + q[jj]) {
              ++k[jj];
              break;
            }
            k[jj] = 0;
            ++j;
          }
          if (j == levels) break;
        }
      }
    }
  }
  // Renormalize away accumulated rounding only; the map itself is unitary.
  double sq = 0.0;
  for (const auto& b : out) sq += b.squaredNorm();
  const double scale = state.norm() / std::sqrt(sq);
  for (auto& b : out) b *= scale;
  return TwoModeState(levels, n, std::move(out));
}

std::map<std::pair<int, int>, double> sector_probabilities(const TwoModeState& state) {
  std::map<std::pair<int, int>, double> out;
  const int n = state.particles();
  for (int na = 0; na <= n; ++na) out[{na, n - na}] = state.sector(na).squaredNorm();
  return out;
}

SectorProjection project_sector(const TwoModeState& state, int na, int nb) {
  if (na < 0 || nb < 0 || na + nb != state.particles()) {
    throw std::invalid_argument("project_sector: N_A + N_B must equal N");
  }
  const Matrix& b = state.sector(na);
  const double prob = b.squaredNorm();
  if (!(prob > kMinSectorProbability)) throw std::invalid_argument("project_sector: sector has zero probability");
  Vector flat(b.size());
  for (Eigen::Index a = 0; a < b.rows(); ++a) flat.segment(a * b.cols(), b.cols()) = b.row(a).transpose();
  return {StateVector::normalized(flat), static_cast<std::size_t>(b.rows()), static_cast<std::size_t>(b.cols()), prob};
}

TwoModeState collapse(const TwoModeState& state, int na) {
  const double prob = state.sector(na).squaredNorm();
  if (!(prob > kMinSectorProbability)) throw std::invalid_argument("collapse: sector has zero probability");
  std::vector<Matrix> sectors;
  for (int k = 0; k <= state.particles(); ++k) {
    const Matrix& b = state.sector(k);
    sectors.push_back(k == na ? Matrix(b / std::sqrt(prob)) : Matrix(Matrix::Zero(b.rows(), b.cols())));
  }
  return TwoModeState(state.levels(), state.particles(), std::move(sectors));
}

ProtocolTrace run_protocol(const sym::SymmetricState& input, const ProtocolConfig& cfg) {
  validate(cfg.tunneling);
  if (cfg.nx < 1 || cfg.ny < 1 || cfg.nx + cfg.ny != input.particles()) {
    throw std::invalid_argument("run_protocol: target must satisfy N_X, N_Y >= 1 and N_X + N_Y = N");
  }
  Rng rng(cfg.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const int n = input.particles();

  ProtocolTrace trace{false, 0, {}, inject(input), std::numeric_limits<double>::quiet_NaN()};
  for (std::size_t round = 1; round <= cfg.max_rounds; ++round) {
    const TwoModeState tunneled = apply_tunneling(trace.final_state, cfg.tunneling);
    const double u = uniform(rng);
    double cumulative = 0.0;
    int outcome = -1;
    int last_nonzero = -1;
    for (int na = 0; na <= n; ++na) {
      const double p = tunneled.sector(na).squaredNorm();
      if (p > kMinSectorProbability) last_nonzero = na;
      cumulative += p;
      if (u < cumulative && p > kMinSectorProbability) {
        outcome = na;
        break;
      }
    }
    if (outcome < 0) outcome = last_nonzero;  // u landed in the rounding slack above the total
    const double prob = tunneled.sector(outcome).squaredNorm();
    trace.final_state = collapse(tunneled, outcome);
    const double fid = target_fidelity(trace.final_state.sector(outcome), input, outcome, n - outcome);
    trace.records.push_back({round, outcome, n - outcome, prob, fid});
    trace.rounds = round;
    if (outcome == cfg.nx) {
      trace.success = true;
      trace.fidelity = fid;
      break;
    }
  }
  return trace;
}

Batch run_batch(const sym::SymmetricState& input, const ProtocolConfig& cfg, std::size_t runs) {
  validate(cfg.tunneling);
  std::vector<std::optional<ProtocolTrace>> slots(runs);
  const auto count = static_cast<std::int64_t>(runs);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    ProtocolConfig run_cfg = cfg;
    run_cfg.seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(i));
    slots[static_cast<std::size_t>(i)].emplace(run_protocol(input, run_cfg));
  }
  Batch b;
  b.traces.reserve(runs);
  for (auto& s : slots) b.traces.push_back(std::move(*s));
  b.summary = summarize(b.traces);
  return b;
}

Batch run_batch_serial(const sym::SymmetricState& input, const ProtocolConfig& cfg, std::size_t runs) {
  validate(cfg.tunneling);
  Batch b;
  b.traces.reserve(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    ProtocolConfig run_cfg = cfg;
    run_cfg.seed = substream_seed(cfg.seed, i);
    b.traces.push_back(run_protocol(input, run_cfg));
  }
  b.summary = summarize(b.traces);
  return b;
}

}  // namespace nc2ent::modesplit
