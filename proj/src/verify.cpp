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

#include "nc2ent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nc2ent/discrete.hpp"
#include "nc2ent/gcnot.hpp"
#include "nc2ent/io.hpp"
#include "nc2ent/modesplit.hpp"
#include "nc2ent/oracles.hpp"
#include "nc2ent/random.hpp"
#include "nc2ent/symmetric.hpp"
#include "nc2ent/witness.hpp"

namespace nc2ent::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t scaled(const Options& opts, std::size_t base) {
  return std::max<std::size_t>(1, base * opts.trials / 100);
}

/// Substream per (suite tag, index).
std::uint64_t stream(const Options& opts, std::uint64_t tag, std::uint64_t index = 0) {
  return substream_seed(substream_seed(opts.seed, tag), index);
}

Check at_most(std::string id, std::string title, double observed, double bound, std::string detail = {}) {
  return {std::move(id), std::move(title), observed <= bound, observed, bound, std::move(detail)};
}

Check at_least(std::string id, std::string title, double observed, double bound, std::string detail = {}) {
  return {std::move(id), std::move(title), observed >= bound, observed, bound, std::move(detail)};
}

std::string num(double x) { return io::format_double(x); }

ClassicalSet random_classical_set(std::size_t d, Rng& rng) {
  while (true) {
    std::vector<StateVector> states;
    for (std::size_t i = 0; i < d; ++i) states.push_back(random_state(d, rng));
    try {
      return ClassicalSet(std::move(states));
    } catch (const DependentSetError&) {
    }
  }
}

Operator random_density(std::size_t d, std::size_t terms, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Operator rho = Operator::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  double total = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    const double w = u(rng) + 1e-3;
    rho += w * random_state(d, rng).projector();
    total += w;
  }
  rho /= total;
  return 0.5 * (rho + rho.adjoint());
}

sym::SymmetricState random_symmetric(int levels, int particles, Rng& rng) {
  return sym::SymmetricState::normalized(levels, particles, gaussian_vector(sym::dicke_dim(levels, particles), rng));
}

sym::SymmetricState coherent_superposition(int levels, int particles, std::size_t terms, Rng& rng) {
  Vector acc = Vector::Zero(static_cast<Eigen::Index>(sym::dicke_dim(levels, particles)));
  for (std::size_t k = 0; k < terms; ++k) {
    acc += complex_gaussian(rng) * sym::coherent_state(sym::haar_random_su(levels, rng), particles).amplitudes();
  }
  return sym::SymmetricState::normalized(levels, particles, acc);
}

StateVector qubit(double a, double b) {
  Vector v(2);
  v << a, b;
  return StateVector(v);
}

}  // namespace

const std::vector<std::string>& suites() {
  static const std::vector<std::string> names{"all", "theorem2", "theorem3", "modesplit", "gcnot", "witness"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& s = suites();
  return std::find(s.begin(), s.end(), name) != s.end();
}

std::vector<Check> theorem2_checks(const Options& opts) {
  const std::size_t trials = scaled(opts, 100);
  std::size_t superpositions = 0;
  std::size_t rank_failures = 0;
  std::size_t oracle_failures = 0;
  double worst_gram = 0.0;
  double worst_unitary = 0.0;
  double worst_negativity = 0.0;
  double worst_decomposition = 0.0;
  double min_entropy = kInf;
  std::size_t mixtures = 0;

  for (std::size_t d = 2; d <= 8; ++d) {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(stream(opts, 100 + d, t));
      const ClassicalSet cs = random_classical_set(d, rng);
      const Conversion conv = make_conversion(cs, std::nullopt);

      const Theorem2Report rep = verify_theorem2(cs, conv, d, rng());
      superpositions += rep.trials;
      rank_failures += rep.failures;
      min_entropy = std::min(min_entropy, rep.min_nonclassical_entropy);

      // Full-support input through the QR rank oracle.
      Vector psi = Vector::Zero(static_cast<Eigen::Index>(d));
      for (std::size_t i = 0; i < d; ++i) psi += complex_gaussian(rng) * cs[i].amplitudes();
      const StateVector out = convert_state(conv, StateVector::normalized(psi));
      if (oracle::schmidt_rank_qr(out.amplitudes(), d, d) != d) ++oracle_failures;

      const Matrix gc = oracle::gram_direct(cs.states());
      const Matrix gd = oracle::gram_direct(conv.d_states);
      const Matrix ge = oracle::gram_direct(conv.e_states);
      worst_gram = std::max(worst_gram, max_abs(gc - gd.cwiseProduct(ge)));
      worst_unitary = std::max(worst_unitary, unitarity_defect(conv.unitary));

      // Mixture of up to five classical projectors.
      std::uniform_int_distribution<std::size_t> count_dist(1, std::min<std::size_t>(5, d));
      std::uniform_int_distribution<std::size_t> index_dist(0, d - 1);
      std::uniform_real_distribution<double> weight_dist(0.05, 1.0);
      const std::size_t k = count_dist(rng);
      std::vector<std::size_t> idx(k);
      std::vector<double> w(k);
      double total = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        idx[j] = index_dist(rng);
        w[j] = weight_dist(rng);
        total += w[j];
      }
      Operator rho = Operator::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t j = 0; j < k; ++j) {
        w[j] /= total;
        rho += w[j] * cs[idx[j]].projector();
      }
      const Operator image = convert_density(conv, rho);
      worst_negativity = std::max(worst_negativity, negativity(image, d, d));
      worst_decomposition = std::max(worst_decomposition, max_abs(assemble(classical_mixture_image(conv, w, idx)) - image));
      ++mixtures;
    }
  }

  std::vector<Check> out;
  {
    Check c{"1", "Schmidt rank of the converted state equals the C-rank (D = 2..8)",
            rank_failures == 0 && oracle_failures == 0, static_cast<double>(rank_failures + oracle_failures), 0.0,
            std::to_string(superpositions) + " superpositions, " + std::to_string(rank_failures) +
                " SVD mismatches, " + std::to_string(oracle_failures) + " QR-oracle mismatches"};
    out.push_back(std::move(c));
  }
  out.push_back(at_most("2a", "Gram splitting G(c) = G(d) o G(e)", worst_gram, 1e-10,
                        std::to_string(7 * trials) + " conversions"));
  out.push_back(at_most("2b", "conversion is unitary", worst_unitary, 1e-10));
  out.push_back(at_most("3a", "classical mixtures convert to PPT outputs", worst_negativity, 1e-10,
                        std::to_string(mixtures) + " mixtures"));
  out.push_back(at_most("3b", "explicit product decomposition of mixture images", worst_decomposition, 1e-10));
  out.push_back({"3c", "C-rank >= 2 inputs give entangled outputs", min_entropy > 1e-8, min_entropy, 1e-8,
                 "minimum output entropy in ebits"});
  return out;
}

std::vector<Check> gcnot_checks(const Options& opts) {
  using std::numbers::pi;
  const StateVector zero = qubit(1.0, 0.0);
  const StateVector one = qubit(0.0, 1.0);
  std::vector<Check> out;

  constexpr std::size_t kThetas = 64;
  double worst_max = 0.0;
  double worst_mirror = 0.0;
  double worst_pointwise = 0.0;
  for (std::size_t k = 0; k < kThetas; ++k) {
    const double theta = pi / 2 + (pi - 0.01 - pi / 2) * static_cast<double>(k) / (kThetas - 1);
    const gcnot::Optimum o0 = gcnot::optimal_epsilon(theta, zero);
    const gcnot::Optimum o1 = gcnot::optimal_epsilon(pi - theta, one);
    worst_max = std::max(worst_max, std::abs(o0.ebits - 1.0));
    worst_mirror = std::max(worst_mirror, std::abs(o1.ebits - o0.ebits));
    const double lo = std::abs(std::cos(theta));
    for (int j = 1; j <= 16; ++j) {
      const double mu = lo + (1.0 - lo) * j / 16.0;
      const double s0 = gcnot::output_entanglement({theta, mu}, zero);
      const double s1 = gcnot::output_entanglement({pi - theta, mu}, one);
      worst_pointwise = std::max(worst_pointwise, std::abs(s1 - s0));
    }
  }
  out.push_back(at_most("4a", "input |0>: max over mu is one ebit for theta in [pi/2, pi-0.01]", worst_max, 1e-6,
                        "64 theta values"));
  out.push_back(at_most("4b", "input |1> profile mirrors |0> about theta = pi/2",
                        std::max(worst_mirror, worst_pointwise), 1e-9,
                        "profile " + num(worst_mirror) + ", pointwise " + num(worst_pointwise)));
  {
    const double theta = 2 * pi / 3;
    const gcnot::Optimum o0 = gcnot::optimal_epsilon(theta, zero);
    const double s1 = gcnot::output_entanglement({theta, o0.mu}, one);
    Check c = at_most("4c", "theta = 2pi/3: |1> at the |0>-optimal eps is not maximal", s1, 1.0 - 1e-3,
                      "eps = " + num(o0.epsilon));
    c.pass = s1 < 1.0 - 1e-3;
    out.push_back(std::move(c));
  }

  {
    const gcnot::ProbeReport p = gcnot::cnot_equivalence_probe(2 * pi / 3, 1024);
    Check c{"5a", "theta = 2pi/3: exactly one maximal input direction in a 1024-point scan",
            p.maximal_directions == 1, static_cast<double>(p.maximal_directions), 1.0,
            std::to_string(p.maximal_samples) + " maximal samples"};
    out.push_back(std::move(c));
    const gcnot::ProbeReport q = gcnot::probe_conversion(pi / 2, 1e-6, 1024);
    Check d{"5b", "CNOT-limit control finds at least two maximal directions", q.maximal_directions >= 2,
            static_cast<double>(q.maximal_directions), 2.0, std::to_string(q.maximal_samples) + " maximal samples"};
    out.push_back(std::move(d));
  }

  {
    Rng rng(stream(opts, 10));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t pairs = scaled(opts, 100);
    double worst_sum = 0.0;
    double worst_product = 0.0;
    double worst_split = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const double ov = 0.01 + 0.98 * u(rng);
      const double mu = ov + (1.0 - ov) * (0.001 + 0.998 * u(rng));
      const double eps = 1.0 / mu - 1.0;
      const gcnot::BeamsplitterParams bp = gcnot::beamsplitter_params(ov, eps);
      worst_sum = std::max(worst_sum, std::abs(bp.x + bp.y - 1.0));
      worst_product = std::max(worst_product, std::abs(std::pow(ov, bp.x) * std::pow(ov, bp.y) - ov));
      worst_split = std::max(worst_split, std::abs(std::pow(ov, bp.x) - (1.0 + eps) * ov));
    }
    out.push_back(at_most("10a", "beamsplitter weights sum to one", worst_sum,
                          4 * std::numeric_limits<double>::epsilon(), std::to_string(pairs) + " pairs"));
    out.push_back(at_most("10b", "overlap^x overlap^y = overlap and overlap^x = (1+eps) overlap",
                          std::max(worst_product, worst_split), 1e-12));
    const gcnot::BeamsplitterParams w = gcnot::beamsplitter_params(std::exp(-1.0), std::exp(0.5) - 1.0);
    out.push_back(at_most("10c", "worked point gives x = y = 1/2",
                          std::max(std::abs(w.x - 0.5), std::abs(w.y - 0.5)), 1e-12));
  }
  return out;
}

std::vector<Check> theorem3_checks(const Options& opts) {
  std::vector<Check> out;
  {
    const std::size_t pairs = scaled(opts, 100);
    double worst = 0.0;
    std::size_t evaluations = 0;
    for (int levels = 2; levels <= 4; ++levels) {
      for (int n = 2; n <= 8; ++n) {
        Rng rng(stream(opts, 600 + static_cast<std::uint64_t>(10 * levels + n)));
        for (std::size_t i = 0; i < pairs; ++i) {
          const sym::SuUnitary u = sym::haar_random_su(levels, rng);
          const sym::SuUnitary v = sym::haar_random_su(levels, rng);
          const cplx whole = sym::dicke_inner(sym::coherent_state(u, n), sym::coherent_state(v, n));
          for (int nx = 1; nx < n; ++nx) {
            const cplx a = sym::dicke_inner(sym::coherent_state(u, nx), sym::coherent_state(v, nx));
            const cplx b = sym::dicke_inner(sym::coherent_state(u, n - nx), sym::coherent_state(v, n - nx));
            worst = std::max(worst, std::abs(whole - a * b));
            ++evaluations;
          }
        }
      }
    }
    out.push_back(at_most("6", "coherent overlaps factorize over every split (K <= 4, N <= 8)", worst, 1e-12,
                          std::to_string(evaluations) + " split overlaps"));
  }
  {
    struct Case {
      int levels, particles, nx;
    };
    const Case cases[] = {{2, 2, 1}, {2, 6, 2}, {3, 4, 2}, {4, 5, 3}, {3, 8, 4}};
    const std::size_t samples = scaled(opts, 50);
    double min_fidelity = 1.0;
    double worst_oracle = 0.0;
    std::size_t rank_failures = 0;
    for (const Case& c : cases) {
      const int ny = c.particles - c.nx;
      const std::size_t dx = sym::dicke_dim(c.levels, c.nx);
      const std::size_t dy = sym::dicke_dim(c.levels, ny);
      Rng rng(stream(opts, 700 + static_cast<std::uint64_t>(100 * c.levels + 10 * c.particles + c.nx)));
      for (std::size_t i = 0; i < samples; ++i) {
        const sym::SuUnitary u = sym::haar_random_su(c.levels, rng);
        const sym::SymmetricState coh = sym::coherent_state(u, c.particles);
        const StateVector split = sym::split_state(coh, c.nx, ny);
        const StateVector expected =
            kron(sym::coherent_state(u, c.nx).as_state(), sym::coherent_state(u, ny).as_state());
        min_fidelity = std::min(min_fidelity, fidelity(split, expected));
        worst_oracle = std::max(worst_oracle, max_abs(split.amplitudes() - oracle::split_first_quantized(
                                                                                coh.amplitudes(), c.levels,
                                                                                c.particles, c.nx, ny)));
      }
      const sym::SuUnitary u = sym::haar_random_su(c.levels, rng);
      Vector e0 = Vector::Zero(c.levels);
      e0(0) = 1.0;
      const Vector sum =
          sym::coherent_state(e0, c.particles).amplitudes() + sym::coherent_state(u, c.particles).amplitudes();
      const StateVector split =
          sym::split_state(sym::SymmetricState::normalized(c.levels, c.particles, sum), c.nx, ny);
      if (schmidt_decompose(split, dx, dy).rank != 2) ++rank_failures;
    }
    out.push_back(at_least("7a", "coherent inputs split into product coherent states", min_fidelity, 1.0 - 1e-10,
                           "minimum fidelity; first-quantized oracle deviation " + num(worst_oracle)));
    if (worst_oracle > 1e-10) out.back().pass = false;
    Check c{"7b", "two-term coherent superposition splits to Schmidt rank 2", rank_failures == 0,
            static_cast<double>(rank_failures), 0.0, std::to_string(std::size(cases)) + " splits"};
    out.push_back(std::move(c));
    const sym::Theorem3Report mixed = sym::verify_theorem3_mixed(2, 4, 2, 2, scaled(opts, 20), stream(opts, 710));
    Check m{"7c", "coherent mixtures stay separable after splitting", mixed.passed,
            std::max(mixed.max_classical_negativity, mixed.max_decomposition_error), 1e-10,
            "minimum non-classical entropy " + num(mixed.min_nonclassical_entropy)};
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Check> modesplit_checks(const Options& opts) {
  using modesplit::Tunneling;
  std::vector<Check> out;
  const std::vector<Tunneling> beamsplitters{
      Tunneling::from_phase(std::sqrt(0.5)), Tunneling::from_phase(0.3, 1.1),
      Tunneling{std::polar(0.8, 0.4), std::polar(0.6, -2.0)}};

  {
    double worst = 0.0;
    Rng rng(stream(opts, 800));
    for (int n = 1; n <= 6; ++n) {
      const sym::SymmetricState coh = sym::coherent_state(sym::haar_random_su(2, rng), n);
      for (const Tunneling& w : beamsplitters) {
        const auto probs = modesplit::sector_probabilities(modesplit::apply_tunneling(modesplit::inject(coh), w));
        for (const auto& [key, p] : probs) {
          worst = std::max(worst, std::abs(p - modesplit::sector_weight(n, key.first, w)));
        }
      }
    }
    out.push_back(at_most("8a", "coherent-input sector probabilities equal |C_{NA,NB}|^2 (K = 2, N <= 6)", worst,
                          1e-10));
  }
  {
    const std::size_t runs = std::max<std::size_t>(100, 10000 * opts.trials / 100);
    Rng rng(stream(opts, 810));
    const sym::SymmetricState coh = sym::coherent_state(sym::haar_random_su(2, rng), 2);
    const modesplit::ProtocolConfig cfg{Tunneling::from_phase(std::sqrt(0.5)), 1, 1, 1, stream(opts, 811)};
    const modesplit::Batch batch = modesplit::run_batch(coh, cfg, runs);
    const double p = modesplit::sector_weight(2, 1, cfg.tunneling);
    const double freq = static_cast<double>(batch.summary.first_round_successes) / static_cast<double>(runs);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(runs));
    out.push_back(at_most("8b", "single-round success frequency within 3 sigma of |C_{1,1}|^2",
                          std::abs(freq - p) / sigma, 3.0,
                          "frequency " + num(freq) + " over " + std::to_string(runs) + " runs, expected " + num(p)));
  }
  {
    struct Case {
      int levels, particles, nx;
    };
    const Case cases[] = {{2, 4, 2}, {2, 4, 1}, {3, 4, 2}, {2, 6, 3}};
    const std::size_t runs = scaled(opts, 200);
    double min_success = 1.0;
    double min_round = 1.0;
    std::size_t successes = 0;
    std::uint64_t tag = 820;
    for (const Case& c : cases) {
      Rng rng(stream(opts, tag));
      const sym::SymmetricState in = coherent_superposition(c.levels, c.particles, 3, rng);
      const modesplit::ProtocolConfig cfg{Tunneling::from_phase(0.6, 0.3), c.nx, c.particles - c.nx, 50,
                                          stream(opts, tag, 1)};
      ++tag;
      const modesplit::Batch batch = modesplit::run_batch(in, cfg, runs);
      successes += batch.summary.successes;
      if (batch.summary.successes > 0) min_success = std::min(min_success, batch.summary.min_fidelity);
      for (const auto& t : batch.traces) {
        for (const auto& r : t.records) min_round = std::min(min_round, r.fidelity);
      }
    }
    Check c = at_least("8c", "post-selected state matches Lambda_{NX,NY}|psi_in> on success", min_success,
                       1.0 - 1e-9,
                       std::to_string(successes) + " successes; minimum over all rounds " + num(min_round));
    if (successes == 0) c.pass = false;
    out.push_back(std::move(c));
  }
  {
    double worst = 0.0;
    Rng rng(stream(opts, 830));
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    for (int n = 1; n <= 6; ++n) {
      const sym::SymmetricState in = random_symmetric(2, n, rng);
      std::vector<Tunneling> ws = beamsplitters;
      const double r = u(rng);
      ws.push_back({std::polar(r, phase(rng)), std::polar(std::sqrt(1.0 - r * r), phase(rng))});
      for (const Tunneling& w : ws) {
        const modesplit::TwoModeState sim = modesplit::apply_tunneling(modesplit::inject(in), w);
        const auto ref = oracle::tunneling_first_quantized(in.amplitudes(), 2, n, w);
        for (int na = 0; na <= n; ++na) {
          worst = std::max(worst, max_abs(sim.sector(na) - ref[static_cast<std::size_t>(na)]));
        }
      }
    }
    out.push_back(at_most("8d", "sector simulation matches the first-quantized oracle (K = 2, N <= 6)", worst,
                          1e-10));
  }
  return out;
}

std::vector<Check> witness_checks(const Options& opts) {
  std::vector<Check> out;
  {
    Rng rng(stream(opts, 900));
    const ClassicalSet cs = random_classical_set(3, rng);
    const Conversion conv = make_conversion(cs, std::nullopt);
    const witness::Pipeline pipe = witness::non_classicality_witness(conv, random_state(3, rng));
    const std::size_t inputs = scaled(opts, 20);
    double worst = 0.0;
    for (std::size_t i = 0; i < inputs; ++i) {
      const Operator rho = random_density(3, 1 + i % 3, rng);
      const double lhs = witness::detect(pipe.non_classicality, rho).value;
      const double rhs = witness::detect(pipe.entanglement, convert_density(conv, rho)).value;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    out.push_back(at_most("9a", "Tr(W~ rho_in) = Tr(W rho_out)", worst, 1e-10,
                          std::to_string(inputs) + " random inputs, D = 3"));
    const double classical = witness::min_classical_expectation(pipe.non_classicality, cs);
    const double product =
        witness::min_product_expectation(pipe.entanglement, 3, 3, scaled(opts, 10000), stream(opts, 901));
    out.push_back(at_least("9b", "W~ is non-negative on classical states and W on product states",
                           std::min(classical, product), -1e-10,
                           "classical " + num(classical) + ", sampled product " + num(product)));
  }
  {
    using std::numbers::pi;
    const StateVector zero = qubit(1.0, 0.0);
    const gcnot::Optimum opt = gcnot::optimal_epsilon(pi / 2, zero);
    const ClassicalSet cs = gcnot::classical_pair(pi / 2);
    const Conversion conv = build_conversion(cs, make_split(cs, opt.epsilon));
    const witness::Pipeline pipe = witness::non_classicality_witness(conv, zero);
    const double value = witness::detect(pipe.non_classicality, zero).value;
    const double classical = witness::min_classical_expectation(pipe.non_classicality, cs);
    Check c = at_most("9c", "GCNOT theta = pi/2: W~ detects |0> while classical states stay non-negative", value,
                      -0.01, "eps = " + num(opt.epsilon) + ", min classical " + num(classical));
    c.pass = value < -0.01 && classical >= -1e-10;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> run_suite(const std::string& suite, const Options& opts) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  std::vector<Check> out;
  auto add = [&](std::vector<Check> more) { out.insert(out.end(), more.begin(), more.end()); };
  const bool all = suite == "all";
  if (all || suite == "theorem2") add(theorem2_checks(opts));
  if (all || suite == "gcnot") add(gcnot_checks(opts));
  if (all || suite == "theorem3") add(theorem3_checks(opts));
  if (all || suite == "modesplit") add(modesplit_checks(opts));
  if (all || suite == "witness") add(witness_checks(opts));
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string format_line(const Check& c) {
  std::ostringstream os;
  os << (c.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (observed " << num(c.observed)
     << ", bound " << num(c.bound) << ")";
  if (!c.detail.empty()) os << "  " << c.detail;
  return os.str();
}

}  // namespace nc2ent::verify
