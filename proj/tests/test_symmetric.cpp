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

#include "nc2ent/oracles.hpp"
#include "nc2ent/random.hpp"
#include "nc2ent/symmetric.hpp"

namespace nc2ent::sym {
namespace {

TEST(DickeTest, Dimensions) {
  EXPECT_EQ(dicke_dim(2, 2), 3u);
  EXPECT_EQ(dicke_dim(2, 1), 2u);
  EXPECT_EQ(dicke_dim(3, 4), 15u);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(occupations(k, n).size(), dicke_dim(k, n));
  }
}

TEST(DickeTest, ReverseLexOrder) {
  const auto occ = occupations(2, 2);
  ASSERT_EQ(occ.size(), 3u);
  EXPECT_EQ(occ[0], (Occupation{2, 0}));
  EXPECT_EQ(occ[1], (Occupation{1, 1}));
  EXPECT_EQ(occ[2], (Occupation{0, 2}));
  const DickeBasis b(3, 3);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b[i]), i);
}

TEST(SuUnitaryTest, Validation) {
  EXPECT_THROW(SuUnitary(Matrix::Identity(1, 1)), std::invalid_argument);
  EXPECT_THROW(SuUnitary(Matrix::Identity(7, 7)), std::invalid_argument);
  EXPECT_THROW(SuUnitary(2.0 * Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST(CoherentTest, IdentityIsReferenceOccupation) {
  const SymmetricState s = coherent_state(SuUnitary(Matrix::Identity(3, 3)), 4);
  EXPECT_NEAR(std::abs(s.amplitudes()(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(s.amplitudes().tail(s.dim() - 1).norm(), 0.0, 1e-15);
}

TEST(CoherentTest, PlusStateAmplitudes) {
  Vector u(2);
  u << std::sqrt(0.5), std::sqrt(0.5);
  const SymmetricState s = coherent_state(u, 2);
  EXPECT_NEAR(s.amplitudes()(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitudes()(1).real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(s.amplitudes()(2).real(), 0.5, 1e-15);
  const Vector fq = oracle::project_to_dicke(oracle::tensor_power(u, 2), 2, 2);
  EXPECT_LE((fq - s.amplitudes()).norm(), 1e-15);
}

TEST(CoherentTest, MatchesTensorPowerOracle) {
  Rng rng(2);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 5; ++n) {
      const SuUnitary u = haar_random_su(k, rng);
      const Vector fq = oracle::project_to_dicke(oracle::tensor_power(u.single_particle(), n), k, n);
      EXPECT_LE((fq - coherent_state(u, n).amplitudes()).norm(), 1e-12) << k << " " << n;
    }
  }
}

TEST(CoherentTest, UnitNormForHaarSamples) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const SuUnitary u = haar_random_su(3, rng);
    EXPECT_NEAR(coherent_state(u, 6).amplitudes().norm(), 1.0, 1e-12);
  }
}

TEST(OverlapTest, PowerLawMatchesDickeInner) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const SuUnitary u = haar_random_su(3, rng);
    const SuUnitary v = haar_random_su(3, rng);
    EXPECT_NEAR(std::abs(overlap(u, u, 5) - 1.0), 0.0, 1e-12);
    const cplx direct = dicke_inner(coherent_state(u, 5), coherent_state(v, 5));
    EXPECT_LE(std::abs(overlap(u, v, 5) - direct), 1e-12);
    for (int nx = 1; nx < 5; ++nx) {
      EXPECT_LE(std::abs(overlap(u, v, 5) - overlap(u, v, nx) * overlap(u, v, 5 - nx)), 1e-12);
    }
  }
}

TEST(HaarTest, ColumnsAndFirstMoment) {
  const SuUnitary a = haar_random_su(3, 77);
  const SuUnitary b = haar_random_su(3, 77);
  EXPECT_EQ(a.matrix(), b.matrix());
  for (int c = 0; c < 3; ++c) EXPECT_NEAR(a.matrix().col(c).norm(), 1.0, 1e-12);

  Rng rng(78);
  constexpr int kSamples = 10000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double p = std::norm(haar_random_su(3, rng).matrix()(0, 0));
    sum += p;
    sq += p * p;
  }
  const double mean = sum / kSamples;
  const double sigma = std::sqrt((sq / kSamples - mean * mean) / kSamples);
  EXPECT_LE(std::abs(mean - 1.0 / 3.0), 3.0 * sigma);
}

TEST(SplittingTest, IsometryAndGramPreservation) {
  const Operator lam = splitting_isometry(3, 5, 2, 3);
  EXPECT_LE(max_abs(lam.adjoint() * lam - Matrix::Identity(lam.cols(), lam.cols())), 1e-12);
  EXPECT_THROW(splitting_isometry(3, 5, 0, 5), std::invalid_argument);
  EXPECT_THROW(splitting_isometry(3, 5, 2, 2), std::invalid_argument);

  Rng rng(5);
  std::vector<StateVector> in, out;
  for (int i = 0; i < 10; ++i) {
    const SymmetricState s = coherent_state(haar_random_su(3, rng), 5);
    in.push_back(s.as_state());
    out.push_back(split_state(s, 2, 3));
  }
  EXPECT_LE(max_abs(gram_of(in).matrix() - gram_of(out).matrix()), 1e-12);
}

TEST(SplittingTest, MatchesFirstQuantizedOracle) {
  Rng rng(6);
  for (int k = 2; k <= 3; ++k) {
    for (int n = 2; n <= 5; ++n) {
      const SymmetricState s = SymmetricState::normalized(k, n, gaussian_vector(dicke_dim(k, n), rng));
      for (int nx = 1; nx < n; ++nx) {
        const Vector fq = oracle::split_first_quantized(s.amplitudes(), k, n, nx, n - nx);
        EXPECT_LE((split_state(s, nx, n - nx).amplitudes() - fq).norm(), 1e-12);
      }
    }
  }
}

TEST(SplittingTest, CoherentInputsGiveProducts) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const SuUnitary u = haar_random_su(3, rng);
    const StateVector out = split_state(coherent_state(u, 6), 2, 4);
    const StateVector expected = kron(coherent_state(u, 2).as_state(), coherent_state(u, 4).as_state());
    EXPECT_GE(fidelity(out, expected), 1.0 - 1e-10);
  }
}

TEST(SplittingTest, TwoTermSuperpositionHasRankTwo) {
  Rng rng(8);
  const SuUnitary ident(Matrix::Identity(2, 2));
  const SuUnitary u = haar_random_su(2, rng);
  const std::vector<SuUnitary> us{ident, u};
  const std::vector<cplx> cs{1.0, 1.0};
  const SymmetricState s = superpose(us, cs, 4);
  const StateVector out = split_state(s, 2, 2);
  EXPECT_EQ(schmidt_decompose(out, 3, 3).rank, 2u);
}

TEST(Theorem3Test, MixedReport) {
  const Theorem3Report r = verify_theorem3_mixed(2, 3, 1, 2, 20, 11);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.max_classical_negativity, 1e-10);
  EXPECT_LE(r.max_classical_entropy, 1e-10);
  EXPECT_GT(r.min_nonclassical_negativity, 0.0);
  EXPECT_EQ(r.min_nonclassical_schmidt_rank, 2u);
  EXPECT_THROW(verify_theorem3_mixed(4, 8, 4, 4, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace nc2ent::sym
