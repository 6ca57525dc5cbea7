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

#include "nc2ent/gcnot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "nc2ent/tolerances.hpp"

namespace nc2ent::gcnot {

namespace {

constexpr std::size_t kGridPoints = 512;
constexpr double kGoldenTol = 1e-8;
constexpr double kMuFloor = 1e-300;

void require_feasible(const Params& p) {
  if (!p.feasible()) {
    std::ostringstream os;
    os << "gcnot: infeasible parameters theta=" << p.theta << " mu=" << p.mu << " (need |cos theta| <= mu <= 1)";
    throw std::invalid_argument(os.str());
  }
}

void require_qubit(const StateVector& input) {
  if (input.dim() != 2) throw std::invalid_argument("gcnot: input must be a qubit state");
}

double entropy_of_singular_values(double s0, double s1) {
  const double n = s0 * s0 + s1 * s1;
  double h = 0.0;
  for (double s : {s0, s1}) {
    const double p = s * s / n;
    if (s > tol::kEntropyCut && p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double lower_mu(double theta) { return std::max(std::abs(std::cos(theta)), kMuFloor); }

StateVector great_circle_state(double phi) {
  Vector v(2);
  v << std::cos(0.5 * phi), std::sin(0.5 * phi);
  return StateVector::normalized(v);
}

std::vector<SweepRow> sweep_row(double theta, std::span<const double> mu_grid, const StateVector& input,
                                bool include_optimum, std::vector<std::pair<double, double>>& infeasible) {
  std::vector<SweepRow> rows;
  for (double mu : mu_grid) {
    const Params p{theta, mu};
    if (!p.feasible()) {
      infeasible.emplace_back(theta, mu);
      continue;
    }
    rows.push_back({theta, mu, p.epsilon(), output_entanglement(p, input)});
  }
  if (include_optimum && theta > 0.0 && theta < std::numbers::pi) {
    const Optimum opt = optimal_epsilon(theta, input);
    const SweepRow best{theta, opt.mu, opt.epsilon, opt.ebits};
    auto pos = std::lower_bound(rows.begin(), rows.end(), best,
                                [](const SweepRow& a, const SweepRow& b) { return a.mu < b.mu; });
    if (pos == rows.end() || pos->mu != best.mu) rows.insert(pos, best);
  }
  return rows;
}

Surface merge(std::vector<std::vector<SweepRow>>& rows, std::vector<std::vector<std::pair<double, double>>>& bad) {
  Surface s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s.rows.insert(s.rows.end(), rows[i].begin(), rows[i].end());
    s.infeasible.insert(s.infeasible.end(), bad[i].begin(), bad[i].end());
  }
  return s;
}

}  // namespace

bool Params::feasible() const {
  return theta > 0.0 && theta < std::numbers::pi && mu > 0.0 && mu <= 1.0 && std::abs(std::cos(theta)) <= mu;
}

ClassicalSet classical_pair(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw std::invalid_argument("gcnot: theta must lie strictly between 0 and pi");
  }
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Vector c0(2), c1(2);
  c0 << c, s;
  c1 << c, -s;
  return ClassicalSet({StateVector::normalized(c0), StateVector::normalized(c1)});
}

double output_entanglement(const Params& p, const StateVector& input) {
  require_feasible(p);
  require_qubit(input);
  const double half = 0.5 * p.theta;
  const cplx x = input[0] / std::cos(half);
  const cplx y = input[1] / std::sin(half);
  const cplx a0 = 0.5 * (x + y);
  const cplx a1 = 0.5 * (x - y);

  const double q = std::clamp(std::cos(p.theta) / p.mu, -1.0, 1.0);
  Eigen::Vector2cd d0(1.0, 0.0), d1(p.mu, std::sqrt(std::max(0.0, 1.0 - p.mu * p.mu)));
  Eigen::Vector2cd e0(1.0, 0.0), e1(q, std::sqrt(std::max(0.0, 1.0 - q * q)));
  const Eigen::Matrix2cd coeff = a0 * d0 * e0.transpose() + a1 * d1 * e1.transpose();
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(coeff);
  const auto& s = svd.singularValues();
  return entropy_of_singular_values(s(0), s(1));
}

double output_entanglement_via_conversion(const Params& p, const StateVector& input) {
  require_feasible(p);
  require_qubit(input);
  const ClassicalSet cs = classical_pair(p.theta);
  const Conversion conv = build_conversion(cs, make_split(cs, p.epsilon()));
  return entanglement_entropy(schmidt_decompose(convert_state(conv, input), 2, 2));
}

Optimum optimal_epsilon(double theta, const StateVector& input) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw std::invalid_argument("optimal_epsilon: theta must lie strictly between 0 and pi");
  }
  require_qubit(input);
  const double lo = lower_mu(theta);
  auto f = [&](double mu) { return output_entanglement({theta, std::clamp(mu, lo, 1.0)}, input); };

  std::vector<double> grid(kGridPoints);
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t k = 0; k < kGridPoints; ++k) {
    grid[k] = k + 1 == kGridPoints ? 1.0 : lo + (1.0 - lo) * static_cast<double>(k) / (kGridPoints - 1);
    const double v = f(grid[k]);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }

  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[best + 1 == kGridPoints ? best : best + 1];
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kGoldenTol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Optimum opt{grid[best], 1.0 / grid[best] - 1.0, best_val};
  for (double mu : {c, d, 0.5 * (a + b)}) {
    const double v = f(mu);
    if (v > opt.ebits) opt = {std::clamp(mu, lo, 1.0), 1.0 / std::clamp(mu, lo, 1.0) - 1.0, v};
  }
  return opt;
}

Surface sweep_surface(std::span<const double> theta_grid, std::span<const double> mu_grid, const StateVector& input,
                      bool include_optimum) {
  require_qubit(input);
  std::vector<std::vector<SweepRow>> rows(theta_grid.size());
  std::vector<std::vector<std::pair<double, double>>> bad(theta_grid.size());
  const auto n = static_cast<std::int64_t>(theta_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    rows[k] = sweep_row(theta_grid[k], mu_grid, input, include_optimum, bad[k]);
  }
  return merge(rows, bad);
}

Surface sweep_surface_serial(std::span<const double> theta_grid, std::span<const double> mu_grid,
                             const StateVector& input, bool include_optimum) {
  require_qubit(input);
  std::vector<std::vector<SweepRow>> rows(theta_grid.size());
  std::vector<std::vector<std::pair<double, double>>> bad(theta_grid.size());
  for (std::size_t k = 0; k < theta_grid.size(); ++k) {
    rows[k] = sweep_row(theta_grid[k], mu_grid, input, include_optimum, bad[k]);
  }
  return merge(rows, bad);
}

ProbeReport probe_conversion(double theta, double mu, std::size_t samples) {
  const Params p{theta, mu};
  require_feasible(p);
  if (samples == 0) throw std::invalid_argument("probe_conversion: need at least one sample");
  ProbeReport r;
  r.theta = theta;
  r.mu = mu;
  r.epsilon = p.epsilon();
  r.samples = samples;
  std::vector<bool> hit(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    hit[k] = output_entanglement(p, great_circle_state(phi)) >= kMaximalThreshold;
    if (hit[k]) {
      ++r.maximal_samples;
      r.maximal_angles.push_back(phi);
    }
  }
  // Count runs of hits on the circle.
  if (r.maximal_samples == samples) {
    r.maximal_directions = 1;
  } else {
    for (std::size_t k = 0; k < samples; ++k) {
      if (hit[k] && !hit[(k + samples - 1) % samples]) ++r.maximal_directions;
    }
  }
  r.ebits_zero = output_entanglement(p, StateVector::basis(2, 0));
  r.ebits_one = output_entanglement(p, StateVector::basis(2, 1));
  return r;
}

ProbeReport cnot_equivalence_probe(double theta, std::size_t samples) {
  if (std::abs(theta - 0.5 * std::numbers::pi) < 1e-12) {
    throw std::invalid_argument("cnot_equivalence_probe: undefined at theta = pi/2");
  }
  const StateVector input = StateVector::basis(2, theta > 0.5 * std::numbers::pi ? 0 : 1);
  const Optimum opt = optimal_epsilon(theta, input);
  return probe_conversion(theta, opt.mu, samples);
}

cplx coherent_overlap(cplx alpha, cplx beta) {
  return std::exp(-0.5 * (std::norm(alpha) + std::norm(beta) - 2.0 * std::conj(alpha) * beta));
}

BeamsplitterParams beamsplitter_params(double overlap, double epsilon) {
  if (!(overlap > 0.0 && overlap < 1.0)) throw std::invalid_argument("beamsplitter_params: overlap must lie in (0, 1)");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("beamsplitter_params: epsilon must be finite and non-negative");
  }
  const double y = -std::log1p(epsilon) / std::log(overlap);
  if (y > 1.0) {
    throw std::invalid_argument("beamsplitter_params: 1/(1+eps) < overlap, no valid beamsplitter");
  }
  return {1.0 - y, y};
}

}  // namespace nc2ent::gcnot
