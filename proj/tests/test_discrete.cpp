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
#include <limits>
#include <numbers>
#include <vector>

#include "nc2ent/discrete.hpp"
#include "nc2ent/gcnot.hpp"
#include "nc2ent/oracles.hpp"
#include "nc2ent/random.hpp"

namespace nc2ent {
namespace {

using std::numbers::pi;

ClassicalSet random_set(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<StateVector> s;
  for (std::size_t i = 0; i < d; ++i) s.push_back(random_state(d, rng));
  return ClassicalSet(s);
}

ClassicalSet orthonormal_set(std::size_t d) {
  std::vector<StateVector> s;
  for (std::size_t i = 0; i < d; ++i) s.push_back(StateVector::basis(d, i));
  return ClassicalSet(s);
}

TEST(ClassicalSetTest, RejectsDependentFamily) {
  const StateVector a = StateVector::basis(2, 0);
  try {
    ClassicalSet cs({a, a});
    FAIL() << "dependent set accepted";
  } catch (const DependentSetError& e) {
    EXPECT_NEAR(e.min_eigenvalue(), 0.0, 1e-12);
  }
  EXPECT_THROW(ClassicalSet({a}), std::invalid_argument);  // one state in dimension 2
}

TEST(DjokovicTest, Examples) {
  EXPECT_LE(max_abs(djokovic_b(0.0, 3).matrix() - Matrix::Identity(3, 3)), 0.0);
  const GramMatrix ones = djokovic_b(1.0, 3);
  EXPECT_LE(max_abs(ones.matrix() - Matrix::Ones(3, 3)), 0.0);
  EXPECT_NEAR(ones.min_eigenvalue(), 0.0, 1e-12);

  Eigen::SelfAdjointEigenSolver<Matrix> es(djokovic_b(0.5, 4).matrix());
  const Eigen::VectorXd ev = es.eigenvalues();
  EXPECT_NEAR(ev(0), 0.5, 1e-14);
  EXPECT_NEAR(ev(1), 0.5, 1e-14);
  EXPECT_NEAR(ev(2), 0.5, 1e-14);
  EXPECT_NEAR(ev(3), 2.5, 1e-14);
}

TEST(EpsilonMaxTest, MatchesClosedForm) {
  for (double theta : {0.3, pi / 3, 1.2, 2.0, 2 * pi / 3, 3.0}) {
    const double expected = oracle::gcnot_epsilon_max(theta);
    EXPECT_NEAR(epsilon_max(gcnot::classical_pair(theta)), expected, 1e-9 * expected) << theta;
  }
  EXPECT_NEAR(epsilon_max(gcnot::classical_pair(pi / 3)), 1.0, 1e-9);
  EXPECT_TRUE(std::isinf(epsilon_max(orthonormal_set(3))));
  EXPECT_DOUBLE_EQ(default_epsilon(orthonormal_set(3)), 1.0);
}

TEST(EpsilonMaxTest, MatchesSmallestEigenvalueFormula) {
  // Equal off-diagonals: lambda_min of M(eps) = (1+eps) lambda_min(G) - eps.
  for (std::size_t d : {3u, 5u}) {
    const ClassicalSet cs(factor_gram(djokovic_b(0.3, d)));
    EXPECT_NEAR(epsilon_max(cs), oracle::epsilon_max_closed(cs.gram().min_eigenvalue()), 1e-8);
  }
}

TEST(MakeSplitTest, GcnotExample) {
  const SplitSpec s = make_split(gcnot::classical_pair(pi / 3), 0.5);
  EXPECT_NEAR(s.gram_e(0, 1).real(), 0.75, 1e-14);
  EXPECT_NEAR(s.gram_d(0, 1).real(), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR((s.gram_d(0, 1) * s.gram_e(0, 1)).real(), 0.5, 1e-14);
}

TEST(MakeSplitTest, OrthonormalSet) {
  const SplitSpec s = make_split(orthonormal_set(3), 4.0);
  EXPECT_LE(max_abs(s.gram_e.matrix() - Matrix::Identity(3, 3)), 1e-15);
  EXPECT_LE(max_abs(s.gram_d.matrix() - djokovic_b(0.2, 3).matrix()), 1e-15);
}

TEST(MakeSplitTest, BoundaryAndInfeasible) {
  const ClassicalSet cs = gcnot::classical_pair(2.0);
  const double emax = epsilon_max(cs);
  const SplitSpec near = make_split(cs, emax * (1.0 - 1e-6));
  EXPECT_GT(near.gram_e.min_eigenvalue(), 0.0);
  EXPECT_LT(near.gram_e.min_eigenvalue(), 1e-5);
  EXPECT_THROW(make_split(cs, emax * 1.01), std::invalid_argument);
  EXPECT_THROW(make_split(cs, 0.0), std::invalid_argument);
  EXPECT_THROW(make_split(cs, -1.0), std::invalid_argument);
}

TEST(BuildConversionTest, ControlledDisplacementLimit) {
  const ClassicalSet cs = orthonormal_set(2);
  const Conversion conv = make_conversion(cs, 1e8);
  for (std::size_t k = 0; k < 2; ++k) {
    const StateVector out = convert_state(conv, cs[k]);
    EXPECT_EQ(schmidt_decompose(out, 2, 2).rank, 1u);
  }
  Vector plus(2);
  plus << 1.0, 1.0;
  const double s = entanglement_entropy(schmidt_decompose(convert_state(conv, StateVector::normalized(plus)), 2, 2));
  EXPECT_NEAR(s, 1.0, 1e-9);
}

TEST(BuildConversionTest, MapsClassicalStatesToProducts) {
  const ClassicalSet cs = gcnot::classical_pair(pi / 2);
  const Conversion conv = make_conversion(cs, 1.0);
  EXPECT_LE(unitarity_defect(conv.unitary), 1e-10);
  for (std::size_t i = 0; i < 2; ++i) {
    const Vector image = conv.unitary * kron(cs[i], conv.reference).amplitudes();
    EXPECT_LE((image - kron(conv.d_states[i], conv.e_states[i]).amplitudes()).norm(), 1e-8);
  }
}

TEST(BuildConversionTest, RandomSetsAllDimensions) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const ClassicalSet cs = random_set(d, 100 + d);
    const Conversion conv = make_conversion(cs);
    EXPECT_LE(unitarity_defect(conv.unitary), 1e-10);
    const Matrix prod = oracle::gram_direct(conv.d_states).cwiseProduct(oracle::gram_direct(conv.e_states));
    EXPECT_LE(max_abs(prod - cs.gram().matrix()), 1e-10);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector image = conv.unitary * kron(cs[i], conv.reference).amplitudes();
      EXPECT_LE((image - kron(conv.d_states[i], conv.e_states[i]).amplitudes()).norm(), 1e-8);
    }
  }
}

TEST(CRankTest, Examples) {
  const ClassicalSet cs = random_set(4, 3);
  EXPECT_EQ(c_rank(cs[3], cs), 1u);
  EXPECT_EQ(c_rank(StateVector::basis(2, 0), gcnot::classical_pair(1.0)), 2u);
  Rng rng(8);
  for (std::size_t r = 1; r <= 4; ++r) {
    Vector psi = Vector::Zero(4);
    for (std::size_t i = 0; i < r; ++i) psi += complex_gaussian(rng) * cs[i].amplitudes();
    EXPECT_EQ(c_rank(StateVector::normalized(psi), cs), r);
  }
}

TEST(ConvertTest, ClassicalInputsGiveProducts) {
  const ClassicalSet cs = random_set(3, 17);
  const Conversion conv = make_conversion(cs);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(schmidt_decompose(convert_state(conv, cs[i]), 3, 3).rank, 1u);
  }
}

TEST(ConvertTest, GcnotLargeEpsilonApproachesOneEbit) {
  const ClassicalSet cs = gcnot::classical_pair(pi / 2);
  const Conversion conv = make_conversion(cs, 1e6);
  const double s = entanglement_entropy(schmidt_decompose(convert_state(conv, StateVector::basis(2, 0)), 2, 2));
  EXPECT_NEAR(s, 1.0, 1e-9);
}

TEST(ConvertTest, MixtureOfClassicalProjectorsIsSeparable) {
  const ClassicalSet cs = random_set(3, 23);
  const Conversion conv = make_conversion(cs);
  const std::vector<double> w{0.3, 0.7};
  const std::vector<std::size_t> idx{0, 2};
  const Operator rho = w[0] * cs[0].projector() + w[1] * cs[2].projector();
  const Operator out = convert_density(conv, rho);
  EXPECT_LE(negativity(out, 3, 3), 1e-10);
  EXPECT_LE(max_abs(assemble(classical_mixture_image(conv, w, idx)) - out), 1e-10);
}

TEST(ConvertTest, DensityMatchesPureState) {
  const ClassicalSet cs = random_set(3, 29);
  const Conversion conv = make_conversion(cs);
  Rng rng(1);
  const StateVector psi = random_state(3, rng);
  EXPECT_LE(max_abs(convert_density(conv, psi.projector()) - convert_state(conv, psi).projector()), 1e-12);
  EXPECT_THROW(convert_density(conv, Operator::Identity(2, 2)), std::invalid_argument);
}

TEST(Theorem2Test, AllTrialsPass) {
  const ClassicalSet cs = random_set(4, 5);
  const Theorem2Report r = verify_theorem2(cs, make_conversion(cs), 100, 42);
  EXPECT_EQ(r.trials, 100u);
  EXPECT_EQ(r.passes, 100u);
  EXPECT_GT(r.min_nonclassical_entropy, 1e-8);
  EXPECT_LE(r.max_discarded_ratio, 1e-10);
}

TEST(Theorem2Test, EightDimensionsEverySupport) {
  const ClassicalSet cs = random_set(8, 6);
  const Theorem2Report r = verify_theorem2(cs, make_conversion(cs), 64, 43);
  EXPECT_EQ(r.failures, 0u);
}

TEST(Theorem2Test, ParallelMatchesSerial) {
  const ClassicalSet cs = random_set(5, 7);
  const Conversion conv = make_conversion(cs);
  const Theorem2Report a = verify_theorem2(cs, conv, 50, 9);
  const Theorem2Report b = verify_theorem2_serial(cs, conv, 50, 9);
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_EQ(a.min_retained_ratio, b.min_retained_ratio);
  EXPECT_EQ(a.max_discarded_ratio, b.max_discarded_ratio);
  EXPECT_EQ(a.min_nonclassical_entropy, b.min_nonclassical_entropy);
}

}  // namespace
}  // namespace nc2ent
