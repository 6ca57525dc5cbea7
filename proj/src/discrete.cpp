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

#include "nc2ent/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "nc2ent/random.hpp"
#include "nc2ent/tolerances.hpp"

namespace nc2ent {

namespace {

constexpr double kEpsilonCap = 1e6;
constexpr double kBisectionRelTol = 1e-10;

GramMatrix checked_gram(const std::vector<StateVector>& states) {
  if (states.empty()) throw std::invalid_argument("ClassicalSet: empty family");
  if (states.size() != states.front().dim()) {
    throw std::invalid_argument("ClassicalSet: need exactly D states of dimension D");
  }
  GramMatrix g = gram_of(states);
  const double lmin = g.min_eigenvalue();
  if (!(lmin > tol::kPd)) {
    std::ostringstream os;
    os << "ClassicalSet: states are not linearly independent (min Gram eigenvalue " << lmin << ")";
    throw DependentSetError(os.str(), lmin);
  }
  return g;
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

struct TrialOutcome {
  bool pass = false;
  std::size_t c_rank = 0;
  double min_retained = 1.0;
  double max_discarded = 0.0;
  double entropy = 0.0;
};

TrialOutcome run_trial(const ClassicalSet& cs, const Conversion& conv, std::uint64_t seed, std::size_t trial) {
  Rng rng(substream_seed(seed, trial));
  const std::size_t d = cs.dim();
  const std::size_t support = 1 + trial % d;
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < support; ++j) psi += complex_gaussian(rng) * cs[order[j]].amplitudes();
  const StateVector in = StateVector::normalized(psi);

  TrialOutcome out;
  out.c_rank = c_rank(in, cs);
  const SchmidtData sd = schmidt_decompose(convert_state(conv, in), d, d);
  out.pass = sd.rank == out.c_rank;
  const double top = sd.coefficients.front();
  for (std::size_t k = 0; k < sd.coefficients.size(); ++k) {
    const double ratio = sd.coefficients[k] / top;
    if (k < sd.rank) {
      out.min_retained = std::min(out.min_retained, ratio);
    } else {
      out.max_discarded = std::max(out.max_discarded, ratio);
    }
  }
  out.entropy = entanglement_entropy(sd);
  return out;
}

Theorem2Report reduce(const std::vector<TrialOutcome>& outcomes) {
  Theorem2Report r;
  r.trials = outcomes.size();
  for (const auto& o : outcomes) {
    (o.pass ? r.passes : r.failures) += 1;
    r.min_retained_ratio = std::min(r.min_retained_ratio, o.min_retained);
    r.max_discarded_ratio = std::max(r.max_discarded_ratio, o.max_discarded);
    if (o.c_rank >= 2) r.min_nonclassical_entropy = std::min(r.min_nonclassical_entropy, o.entropy);
  }
  return r;
}

}  // namespace

ClassicalSet::ClassicalSet(std::vector<StateVector> states)
    : states_(std::move(states)), gram_(checked_gram(states_)) {
  const auto d = static_cast<Eigen::Index>(states_.size());
  columns_.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) columns_.col(i) = states_[static_cast<std::size_t>(i)].amplitudes();
}

StateVector Conversion::embed(const StateVector& psi) const {
  if (psi.dim() != dim()) throw std::invalid_argument("Conversion: input dimension mismatch");
  return kron(psi, reference);
}

GramMatrix djokovic_b(double lambda, std::size_t dim) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("djokovic_b: lambda must lie in [0, 1]");
  if (dim == 0) throw std::invalid_argument("djokovic_b: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix b = Matrix::Constant(n, n, lambda);
  b.diagonal().setOnes();
  return GramMatrix(std::move(b));
}

Matrix scaled_overlaps(const ClassicalSet& cs, double epsilon) {
  Matrix m = cs.gram().matrix() * (1.0 + epsilon);
  m.diagonal().setOnes();
  return m;
}

double epsilon_max(const ClassicalSet& cs) {
  auto pd = [&](double eps) { return min_eigenvalue(scaled_overlaps(cs, eps)) > 0.0; };
  if (pd(kEpsilonCap)) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = 1.0;
  while (pd(hi)) {
    lo = hi;
    hi = std::min(2.0 * hi, kEpsilonCap);
  }
  while (hi - lo > kBisectionRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    (pd(mid) ? lo : hi) = mid;
  }
  return lo;
}

double default_epsilon(const ClassicalSet& cs) {
  const double emax = epsilon_max(cs);
  return std::isinf(emax) ? 1.0 : 0.5 * emax;
}

SplitSpec make_split(const ClassicalSet& cs, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("make_split: epsilon must be positive and finite");
  }
  const Matrix m = scaled_overlaps(cs, epsilon);
  const double lmin = min_eigenvalue(m);
  if (!(lmin > tol::kPd)) {
    std::ostringstream os;
    os << "make_split: epsilon " << epsilon << " is infeasible (min eigenvalue of the scaled Gram " << lmin
       << ", epsilon_max " << epsilon_max(cs) << ")";
    throw std::invalid_argument(os.str());
  }
  GramMatrix gram_d = djokovic_b(1.0 / (1.0 + epsilon), cs.dim());
  GramMatrix gram_e(m);
  auto d_states = factor_gram(gram_d);
  auto e_states = factor_gram(gram_e);
  return SplitSpec{epsilon, std::move(gram_d), std::move(gram_e), std::move(d_states), std::move(e_states)};
}

Conversion build_conversion(const ClassicalSet& cs, const SplitSpec& split, const StateVector& reference) {
  const std::size_t d = cs.dim();
  if (reference.dim() != d) throw std::invalid_argument("build_conversion: reference dimension mismatch");
  if (split.d_states.size() != d || split.e_states.size() != d) {
    throw std::invalid_argument("build_conversion: split does not match the classical set");
  }
  std::vector<StateVector> from;
  std::vector<StateVector> to;
  from.reserve(d);
  to.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    from.push_back(kron(cs[i], reference));
    to.push_back(kron(split.d_states[i], split.e_states[i]));
  }
  Operator u = synthesize_unitary(from, to);
  return Conversion{std::move(u), reference, split.epsilon, split.d_states, split.e_states};
}

Conversion build_conversion(const ClassicalSet& cs, const SplitSpec& split) {
  return build_conversion(cs, split, cs[0]);
}

Conversion make_conversion(const ClassicalSet& cs, std::optional<double> epsilon) {
  return build_conversion(cs, make_split(cs, epsilon.value_or(default_epsilon(cs))));
}

Vector classical_coefficients(const StateVector& psi, const ClassicalSet& cs) {
  if (psi.dim() != cs.dim()) throw std::invalid_argument("classical_coefficients: dimension mismatch");
  return cs.columns().colPivHouseholderQr().solve(psi.amplitudes());
}

std::size_t c_rank(const StateVector& psi, const ClassicalSet& cs) {
  const Eigen::VectorXd mod = classical_coefficients(psi, cs).cwiseAbs();
  const double cut = tol::kRank * mod.maxCoeff();
  return static_cast<std::size_t>((mod.array() > cut).count());
}

StateVector convert_state(const Conversion& conv, const StateVector& psi) {
  return StateVector::normalized(conv.unitary * conv.embed(psi).amplitudes());
}

Operator convert_density(const Conversion& conv, const Operator& rho) {
  if (static_cast<std::size_t>(rho.rows()) != conv.dim() || rho.rows() != rho.cols()) {
    throw std::invalid_argument("convert_density: dimension mismatch");
  }
  const Operator embedded = kron(rho, conv.reference.projector());
  return conv.unitary * embedded * conv.unitary.adjoint();
}

std::vector<ProductTerm> classical_mixture_image(const Conversion& conv, std::span<const double> weights,
                                                 std::span<const std::size_t> indices) {
  if (weights.size() != indices.size()) throw std::invalid_argument("classical_mixture_image: size mismatch");
  std::vector<ProductTerm> terms;
  terms.reserve(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const std::size_t i = indices[k];
    if (i >= conv.d_states.size()) throw std::invalid_argument("classical_mixture_image: index out of range");
    if (weights[k] < 0.0) throw std::invalid_argument("classical_mixture_image: negative weight");
    terms.push_back(ProductTerm{weights[k], conv.d_states[i], conv.e_states[i]});
  }
  return terms;
}

Operator assemble(std::span<const ProductTerm> terms) {
  if (terms.empty()) throw std::invalid_argument("assemble: no terms");
  const auto n = static_cast<Eigen::Index>(terms.front().left.dim() * terms.front().right.dim());
  Operator out = Operator::Zero(n, n);
  for (const auto& t : terms) out += t.weight * kron(t.left.projector(), t.right.projector());
  return out;
}

Theorem2Report verify_theorem2(const ClassicalSet& cs, const Conversion& conv, std::size_t trials,
                               std::uint64_t seed) {
  std::vector<TrialOutcome> outcomes(trials);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < n; ++t) {
    outcomes[static_cast<std::size_t>(t)] = run_trial(cs, conv, seed, static_cast<std::size_t>(t));
  }
  return reduce(outcomes);
}

Theorem2Report verify_theorem2_serial(const ClassicalSet& cs, const Conversion& conv, std::size_t trials,
                                      std::uint64_t seed) {
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) outcomes.push_back(run_trial(cs, conv, seed, t));
  return reduce(outcomes);
}

}  // namespace nc2ent
