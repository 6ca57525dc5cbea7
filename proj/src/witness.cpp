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

#include "nc2ent/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "nc2ent/random.hpp"
#include "nc2ent/tolerances.hpp"

namespace nc2ent::witness {

namespace {

double product_sample(const Witness& w, std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  Rng rng(seed);
  const StateVector a = random_state(dim_a, rng);
  const StateVector b = random_state(dim_b, rng);
  const Vector v = kron(a, b).amplitudes();
  return v.dot(w.op() * v).real();
}

void check_product_dims(const Witness& w, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0 || dim_a * dim_b != w.dim()) {
    throw std::invalid_argument("min_product_expectation: dimension mismatch");
  }
}

}  // namespace

Witness::Witness(Operator op, std::string label) : op_(std::move(op)), label_(std::move(label)) {
  if (op_.rows() != op_.cols() || op_.rows() == 0) throw std::invalid_argument("Witness: operator must be square");
  if (max_abs(op_ - op_.adjoint()) > tol::kHermitian) throw std::invalid_argument("Witness: operator is not Hermitian");
  op_ = (0.5 * (op_ + op_.adjoint())).eval();
}

Witness swap_style_witness(std::size_t dim_a, std::size_t dim_b, const StateVector& phi) {
  if (phi.dim() != dim_a * dim_b) throw std::invalid_argument("swap_style_witness: dimension mismatch");
  const SchmidtData sd = schmidt_decompose(phi, dim_a, dim_b);
  const double l1 = sd.coefficients.front();
  const auto n = static_cast<Eigen::Index>(phi.dim());
  return Witness(l1 * l1 * Operator::Identity(n, n) - phi.projector(), "projector");
}

Operator pull_back(const Witness& w, const Conversion& conv) {
  if (w.dim() != static_cast<std::size_t>(conv.unitary.rows())) {
    throw std::invalid_argument("pull_back: witness and conversion dimensions differ");
  }
  const Operator wp = conv.unitary.adjoint() * w.op() * conv.unitary;
  return 0.5 * (wp + wp.adjoint());
}

Witness restrict_to_reference(const Operator& wp, const StateVector& reference) {
  const auto r = static_cast<Eigen::Index>(reference.dim());
  if (wp.rows() != wp.cols() || r == 0 || wp.rows() % r != 0) {
    throw std::invalid_argument("restrict_to_reference: dimension mismatch");
  }
  const Eigen::Index n = wp.rows() / r;
  const Vector& ref = reference.amplitudes();
  Operator out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = ref.dot(wp.block(i * r, j * r, r, r) * ref);
    }
  }
  return Witness(std::move(out), "restricted");
}

Detection detect(const Witness& w, const Operator& rho) {
  if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != w.dim()) {
    throw std::invalid_argument("detect: shape mismatch");
  }
  validate_density(rho, tol::kDensity);
  const double value = (w.op() * rho).trace().real();
  return {value, value < -tol::kDetect};
}

Detection detect(const Witness& w, const StateVector& psi) {
  if (psi.dim() != w.dim()) throw std::invalid_argument("detect: shape mismatch");
  const double value = psi.amplitudes().dot(w.op() * psi.amplitudes()).real();
  return {value, value < -tol::kDetect};
}

double min_product_expectation(const Witness& w, std::size_t dim_a, std::size_t dim_b, std::size_t samples,
                               std::uint64_t seed) {
  check_product_dims(w, dim_a, dim_b);
  std::vector<double> values(samples);
  const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(i)] =
        product_sample(w, dim_a, dim_b, substream_seed(seed, static_cast<std::uint64_t>(i)));
  }
  double best = std::numeric_limits<double>::infinity();
  for (double v : values) best = std::min(best, v);
  return best;
}

double min_product_expectation_serial(const Witness& w, std::size_t dim_a, std::size_t dim_b, std::size_t samples,
                                      std::uint64_t seed) {
  check_product_dims(w, dim_a, dim_b);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    best = std::min(best, product_sample(w, dim_a, dim_b, substream_seed(seed, i)));
  }
  return best;
}

Pipeline non_classicality_witness(const Conversion& conv, const StateVector& target) {
  const std::size_t d = conv.dim();
  const StateVector phi = convert_state(conv, target);
  Witness w = swap_style_witness(d, d, phi);
  Witness wt = restrict_to_reference(pull_back(w, conv), conv.reference);
  return {std::move(w), std::move(wt)};
}

double min_classical_expectation(const Witness& wt, const ClassicalSet& cs) {
  if (wt.dim() != cs.dim()) throw std::invalid_argument("min_classical_expectation: dimension mismatch");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cs.states()) best = std::min(best, detect(wt, c).value);
  return best;
}

}  // namespace nc2ent::witness
