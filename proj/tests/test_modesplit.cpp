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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nc2ent/modesplit.hpp"
#include "nc2ent/oracles.hpp"
#include "nc2ent/random.hpp"

namespace nc2ent::modesplit {
namespace {

sym::SymmetricState coherent(int k, int n, std::uint64_t seed) {
  return sym::coherent_state(sym::haar_random_su(k, seed), n);
}

sym::SymmetricState two_term(int k, int n, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<sym::SuUnitary> us{sym::haar_random_su(k, rng), sym::haar_random_su(k, rng)};
  const std::vector<cplx> cs{complex_gaussian(rng), complex_gaussian(rng)};
  return sym::superpose(us, cs, n);
}

const Tunneling kBalanced = Tunneling::from_phase(std::sqrt(0.5));

TEST(TwoModeStateTest, Validation) {
  std::vector<Matrix> s{Matrix::Zero(1, 3), Matrix::Zero(2, 2), Matrix::Zero(3, 1)};
  EXPECT_THROW(TwoModeState(2, 2, s), std::invalid_argument);  // zero norm
  s[2](0, 0) = 1.0;
  EXPECT_NO_THROW(TwoModeState(2, 2, s));
  s[1] = Matrix::Zero(3, 3);
  EXPECT_THROW(TwoModeState(2, 2, s), std::invalid_argument);
}

TEST(TunnelingTest, Validation) {
  EXPECT_THROW(validate({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(validate({0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(validate({0.6, 0.7}), std::invalid_argument);
  EXPECT_NO_THROW(validate({0.6, cplx(0.0, 0.8)}));
  EXPECT_THROW(Tunneling::from_phase(1.5), std::invalid_argument);
}

TEST(InjectTest, CoherentGoesToFullSector) {
  const sym::SymmetricState in = coherent(3, 3, 1);
  const TwoModeState s = inject(in);
  EXPECT_LE((s.sector(3).col(0) - in.amplitudes()).norm(), 0.0);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  const auto p = sector_probabilities(s);
  EXPECT_NEAR(p.at({3, 0}), 1.0, 1e-15);
}

TEST(ApplyTunnelingTest, FullReflectionIsIdentity) {
  const sym::SymmetricState in = two_term(2, 3, 2);
  const TwoModeState s = apply_tunneling(inject(in), {1.0, 0.0});
  EXPECT_LE((s.sector(3).col(0) - in.amplitudes()).norm(), 1e-15);
}

TEST(ApplyTunnelingTest, BalancedSectorWeights) {
  const auto p = sector_probabilities(apply_tunneling(inject(coherent(2, 2, 3)), kBalanced));
  EXPECT_NEAR(p.at({2, 0}), 0.25, 1e-12);
  EXPECT_NEAR(p.at({1, 1}), 0.5, 1e-12);
  EXPECT_NEAR(p.at({0, 2}), 0.25, 1e-12);
}

TEST(ApplyTunnelingTest, NormPreservedAndProbabilitiesSumToOne) {
  Rng rng(4);
  for (int n = 1; n <= 6; ++n) {
    const sym::SymmetricState in = sym::SymmetricState::normalized(3, n, gaussian_vector(sym::dicke_dim(3, n), rng));
    const TwoModeState s = apply_tunneling(inject(in), {std::polar(0.3, 1.0), std::polar(std::sqrt(0.91), -0.2)});
    double total = 0.0;
    for (const auto& [k, p] : sector_probabilities(s)) total += p;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(ApplyTunnelingTest, MatchesFirstQuantizedOracle) {
  Rng rng(5);
  for (int k = 2; k <= 3; ++k) {
    for (int n = 1; n <= (k == 2 ? 6 : 4); ++n) {
      const sym::SymmetricState in =
          sym::SymmetricState::normalized(k, n, gaussian_vector(sym::dicke_dim(k, n), rng));
      const Tunneling w{std::polar(0.7, 0.3), std::polar(std::sqrt(0.51), 2.1)};
      const TwoModeState s = apply_tunneling(inject(in), w);
      const auto ref = oracle::tunneling_first_quantized(in.amplitudes(), k, n, w);
      for (int na = 0; na <= n; ++na) EXPECT_LE(max_abs(s.sector(na) - ref[static_cast<std::size_t>(na)]), 1e-12);
    }
  }
}

TEST(ApplyTunnelingTest, InverseRoundTrip) {
  // W is Hermitian for real r, t, so it is its own inverse.
  const sym::SymmetricState in = two_term(2, 4, 6);
  const Tunneling w = Tunneling::from_phase(0.4);
  const TwoModeState twice = apply_tunneling(apply_tunneling(inject(in), w), w);
  EXPECT_LE((twice.sector(4).col(0) - in.amplitudes()).norm(), 1e-12);
}

TEST(SectorWeightTest, CoherentInputsMatchBinomial) {
  for (int n = 1; n <= 6; ++n) {
    const Tunneling w{std::polar(0.8, 0.4), std::polar(0.6, -2.0)};
    const auto p = sector_probabilities(apply_tunneling(inject(coherent(2, n, 7 + n)), w));
    for (const auto& [key, prob] : p) EXPECT_NEAR(prob, sector_weight(n, key.first, w), 1e-12);
  }
}

TEST(ProjectSectorTest, CoherentGivesProductCoherent) {
  const sym::SuUnitary u = sym::haar_random_su(2, 9);
  const TwoModeState s = apply_tunneling(inject(sym::coherent_state(u, 4)), kBalanced);
  for (int na = 1; na <= 3; ++na) {
    const SectorProjection p = project_sector(s, na, 4 - na);
    const StateVector expected =
        kron(sym::coherent_state(u, na).as_state(), sym::coherent_state(u, 4 - na).as_state());
    EXPECT_GE(fidelity(p.state, expected), 1.0 - 1e-10);
  }
}

TEST(ProjectSectorTest, SuperpositionGivesSplittingOutput) {
  const sym::SymmetricState in = two_term(3, 4, 10);
  const TwoModeState s = apply_tunneling(inject(in), Tunneling::from_phase(0.5, 0.7));
  const SectorProjection p = project_sector(s, 2, 2);
  EXPECT_GE(fidelity(p.state, sym::split_state(in, 2, 2)), 1.0 - 1e-10);
}

TEST(ProjectSectorTest, Errors) {
  const TwoModeState s = inject(coherent(2, 2, 11));
  EXPECT_THROW(project_sector(s, 1, 1), std::invalid_argument);
  EXPECT_THROW(project_sector(s, 1, 2), std::invalid_argument);
  EXPECT_THROW(collapse(s, 0), std::invalid_argument);
}

TEST(ProtocolTest, ZeroRoundsFailsImmediately) {
  const ProtocolTrace t = run_protocol(coherent(2, 2, 12), {kBalanced, 1, 1, 0, 1});
  EXPECT_FALSE(t.success);
  EXPECT_EQ(t.rounds, 0u);
  EXPECT_TRUE(t.records.empty());
  EXPECT_TRUE(std::isnan(t.fidelity));
}

TEST(ProtocolTest, RejectsBadTargets) {
  const sym::SymmetricState in = coherent(2, 3, 13);
  EXPECT_THROW(run_protocol(in, {kBalanced, 0, 3, 5, 1}), std::invalid_argument);
  EXPECT_THROW(run_protocol(in, {kBalanced, 1, 1, 5, 1}), std::invalid_argument);
  EXPECT_THROW(run_protocol(in, {{1.0, 0.0}, 1, 2, 5, 1}), std::invalid_argument);
}

TEST(ProtocolTest, SuperpositionFidelityOnSuccess) {
  const sym::SymmetricState in = two_term(2, 3, 14);
  const Batch b = run_batch(in, {Tunneling::from_phase(0.6), 1, 2, 40, 15}, 300);
  EXPECT_GT(b.summary.successes, 250u);
  for (const auto& t : b.traces) {
    if (t.success) {
      EXPECT_GE(t.fidelity, 1.0 - 1e-9);
    }
    for (const auto& r : t.records) EXPECT_GE(r.fidelity, 1.0 - 1e-9);
  }
}

TEST(ProtocolTest, FirstRoundFrequency) {
  const Batch b = run_batch(coherent(2, 2, 16), {kBalanced, 1, 1, 1, 17}, 10000);
  const double freq = static_cast<double>(b.summary.first_round_successes) / 10000.0;
  EXPECT_LE(std::abs(freq - 0.5), 3.0 * std::sqrt(0.25 / 10000.0));
  EXPECT_EQ(b.summary.successes, b.summary.first_round_successes);
}

TEST(ProtocolTest, SeededRunsAreReproducible) {
  const sym::SymmetricState in = two_term(2, 4, 18);
  const ProtocolConfig cfg{Tunneling::from_phase(0.3, 0.2), 2, 2, 10, 19};
  const ProtocolTrace a = run_protocol(in, cfg);
  const ProtocolTrace b = run_protocol(in, cfg);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].na, b.records[i].na);
    EXPECT_EQ(a.records[i].probability, b.records[i].probability);
  }
}

TEST(ProtocolTest, ParallelBatchMatchesSerial) {
  const sym::SymmetricState in = two_term(3, 3, 20);
  const ProtocolConfig cfg{Tunneling::from_phase(0.5, 0.4), 1, 2, 8, 21};
  const Batch a = run_batch(in, cfg, 200);
  const Batch b = run_batch_serial(in, cfg, 200);
  ASSERT_EQ(a.traces.size(), b.traces.size());
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    EXPECT_EQ(a.traces[i].rounds, b.traces[i].rounds);
    EXPECT_EQ(a.traces[i].success, b.traces[i].success);
  }
  EXPECT_EQ(a.summary.successes, b.summary.successes);
  EXPECT_EQ(a.summary.mean_fidelity, b.summary.mean_fidelity);
  EXPECT_EQ(run_batch(in, cfg, 0).summary.runs, 0u);
}

}  // namespace
}  // namespace nc2ent::modesplit
