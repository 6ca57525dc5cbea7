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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nc2ent/discrete.hpp"
#include "nc2ent/gcnot.hpp"
#include "nc2ent/io.hpp"
#include "nc2ent/modesplit.hpp"
#include "nc2ent/random.hpp"
#include "nc2ent/symmetric.hpp"
#include "nc2ent/tolerances.hpp"
#include "nc2ent/verify.hpp"
#include "nc2ent/witness.hpp"

namespace {

using nc2ent::io::Json;

constexpr std::uint64_t kDefaultSeed = 20260101;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("NC2ENT_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("NC2ENT_SEED is not an unsigned integer: ") + env);
  }
}

std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    nc2ent::io::write_text_file(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json tolerances() {
  namespace tol = nc2ent::tol;
  Json t;
  t["norm"] = tol::kNorm;
  t["hermitian"] = tol::kHermitian;
  t["positive_definite"] = tol::kPd;
  t["rank_relative"] = tol::kRank;
  t["gram_match"] = tol::kGramMatch;
  t["unitary"] = tol::kUnitary;
  t["detect"] = tol::kDetect;
  return t;
}

struct Range {
  double lo;
  double hi;
  std::size_t n;
};

Range parse_range(const std::string& text, const char* what) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  try {
    if (parts.size() != 3) throw std::invalid_argument(text);
    Range r{std::stod(parts[0]), std::stod(parts[1]), static_cast<std::size_t>(std::stoul(parts[2]))};
    if (r.n == 0 || parts[2].front() == '-' || !std::isfinite(r.lo) || !std::isfinite(r.hi)) {
      throw std::invalid_argument(text);
    }
    return r;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be A:B:n with n >= 1, got \"" + text + "\"");
  }
}

std::vector<double> grid(const Range& r, double scale) {
  std::vector<double> out(r.n);
  for (std::size_t k = 0; k < r.n; ++k) {
    const double f = r.n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(r.n - 1);
    out[k] = scale * (k + 1 == r.n && r.n > 1 ? r.hi : r.lo + (r.hi - r.lo) * f);
  }
  return out;
}

nc2ent::cplx parse_scalar(const std::string& text) {
  try {
    return nc2ent::io::parse_complex(Json::parse(text));
  } catch (const std::exception&) {
    throw UsageError("expected a number or [re, im], got \"" + text + "\"");
  }
}

std::pair<int, int> parse_target(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("--target must be NX:NY, got \"" + text + "\"");
  }
}

nc2ent::StateVector input_state(const std::string& vec, const std::string& file, std::size_t dim, bool normalize) {
  if (vec.empty() == file.empty()) throw UsageError("give exactly one of --input and --input-file");
  const nc2ent::Vector v =
      vec.empty() ? nc2ent::io::parse_vector(nc2ent::io::read_json_file(file)) : nc2ent::io::parse_vector_text(vec);
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw nc2ent::io::FormatError("input has length " + std::to_string(v.size()) + ", expected " +
                                  std::to_string(dim));
  }
  if (!normalize && std::abs(v.norm() - 1.0) > 1e-9) {
    throw nc2ent::io::FormatError("input is not normalized (use --normalize to rescale)");
  }
  return nc2ent::StateVector::normalized(v);
}

Json schmidt_json(const nc2ent::SchmidtData& sd) {
  Json j;
  j["rank"] = sd.rank;
  j["coefficients"] = sd.coefficients;
  return j;
}

// ---- convert ---------------------------------------------------------------

struct ConvertArgs {
  std::string states;
  std::optional<double> epsilon;
  std::string input;
  std::string input_file;
  std::string out;
  bool normalize = false;
};

int run_convert(const ConvertArgs& a, const std::string& echo) {
  const auto set = nc2ent::io::read_state_set(a.states, a.normalize);
  const nc2ent::ClassicalSet cs(set.states);
  const nc2ent::StateVector psi = input_state(a.input, a.input_file, cs.dim(), a.normalize);
  const double eps = a.epsilon.value_or(nc2ent::default_epsilon(cs));
  const nc2ent::Conversion conv = nc2ent::build_conversion(cs, nc2ent::make_split(cs, eps));
  const nc2ent::StateVector out = nc2ent::convert_state(conv, psi);
  const nc2ent::SchmidtData sd = nc2ent::schmidt_decompose(out, cs.dim(), cs.dim());

  Json j;
  j["schema"] = nc2ent::io::kSchema;
  j["command"] = echo;
  j["dimension"] = cs.dim();
  j["epsilon"] = eps;
  const double emax = nc2ent::epsilon_max(cs);
  j["epsilon_max"] = std::isinf(emax) ? Json("inf") : Json(emax);
  j["min_gram_eigenvalue"] = cs.gram().min_eigenvalue();
  j["input"] = nc2ent::io::to_json(psi.amplitudes());
  j["classical_coefficients"] = nc2ent::io::to_json(nc2ent::classical_coefficients(psi, cs));
  j["c_rank"] = nc2ent::c_rank(psi, cs);
  j["output"] = nc2ent::io::to_json(out.amplitudes());
  j["schmidt"] = schmidt_json(sd);
  j["entropy_ebits"] = nc2ent::entanglement_entropy(sd);
  j["unitarity_defect"] = nc2ent::unitarity_defect(conv.unitary);
  emit(a.out, dump(j));
  return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string theta_range;
  std::string mu_range = "0.01:1:100";
  int input = 0;
  bool degrees = false;
  bool no_optimum = false;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  const double scale = a.degrees ? std::numbers::pi / 180.0 : 1.0;
  const Range tr = a.theta_range.empty() ? Range{0.01 / scale, (std::numbers::pi - 0.01) / scale, 64}
                                         : parse_range(a.theta_range, "--theta-range");
  const Range mr = parse_range(a.mu_range, "--mu-range");
  const std::vector<double> thetas = grid(tr, scale);
  const std::vector<double> mus = grid(mr, 1.0);
  for (double t : thetas) {
    if (!(t > 0.0 && t < std::numbers::pi)) throw UsageError("theta values must lie strictly between 0 and pi");
  }
  for (double m : mus) {
    if (!(m > 0.0 && m <= 1.0)) throw UsageError("mu values must lie in (0, 1]");
  }
  const nc2ent::StateVector in = nc2ent::StateVector::basis(2, static_cast<std::size_t>(a.input));
  const nc2ent::gcnot::Surface s = nc2ent::gcnot::sweep_surface(thetas, mus, in, !a.no_optimum);
  std::ostringstream os;
  nc2ent::io::write_sweep_csv(os, s);
  emit(a.out, os.str());
  if (!s.infeasible.empty()) {
    std::cerr << s.infeasible.size() << " infeasible (theta, mu) cells omitted: (1+eps)|cos theta| > 1\n";
  }
  return 0;
}

// ---- modesplit -------------------------------------------------------------

struct ModesplitArgs {
  int levels = 2;
  int particles = 2;
  std::string target = "1:1";
  std::string r;
  std::string t;
  double phi = 0.0;
  std::size_t runs = 1000;
  std::size_t max_rounds = 1;
  std::optional<std::uint64_t> seed;
  std::string input_file;
  std::string out;
};

nc2ent::modesplit::Tunneling tunneling_from(const ModesplitArgs& a) {
  using nc2ent::cplx;
  if (a.r.empty() && a.t.empty()) return nc2ent::modesplit::Tunneling::from_phase(std::sqrt(0.5), a.phi);
  if (!a.r.empty() && !a.t.empty()) {
    const cplx r = parse_scalar(a.r);
    const cplx t = parse_scalar(a.t);
    const double total = std::norm(r) + std::norm(t);
    if (std::abs(total - 1.0) > 1e-9) {
      throw UsageError("|r|^2 + |t|^2 = " + nc2ent::io::format_double(total) + ", expected 1");
    }
    const double n = std::sqrt(total);
    return {r / n, t / n};
  }
  if (!a.r.empty()) {
    const cplx r = parse_scalar(a.r);
    if (std::abs(r) > 1.0) throw UsageError("|r| must not exceed 1");
    return {r, std::polar(std::sqrt(std::max(0.0, 1.0 - std::norm(r))), a.phi)};
  }
  const cplx t = parse_scalar(a.t);
  if (std::abs(t) > 1.0) throw UsageError("|t| must not exceed 1");
  return {cplx(std::sqrt(std::max(0.0, 1.0 - std::norm(t))), 0.0), t};
}

Json nullable(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

int run_modesplit(const ModesplitArgs& a, std::uint64_t seed) {
  namespace ms = nc2ent::modesplit;
  const auto [nx, ny] = parse_target(a.target);
  const ms::Tunneling w = tunneling_from(a);
  try {
    ms::validate(w);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const nc2ent::sym::SymmetricState in =
      a.input_file.empty()
          ? nc2ent::sym::coherent_state(nc2ent::sym::haar_random_su(a.levels, nc2ent::substream_seed(seed, 0)),
                                        a.particles)
          : nc2ent::io::read_modesplit_input(a.input_file);
  if (nx < 1 || ny < 1 || nx + ny != in.particles()) {
    throw UsageError("--target NX:NY needs NX, NY >= 1 and NX + NY = N (" + std::to_string(in.particles()) + ")");
  }
  const ms::ProtocolConfig cfg{w, nx, ny, a.max_rounds, nc2ent::substream_seed(seed, 1)};
  const ms::Batch batch = ms::run_batch(in, cfg, a.runs);

  std::ostringstream os;
  for (std::size_t run = 0; run < batch.traces.size(); ++run) {
    const auto& trace = batch.traces[run];
    for (const auto& r : trace.records) {
      Json j;
      j["type"] = "round";
      j["run"] = run;
      j["round"] = r.round;
      j["outcome"] = {r.na, r.nb};
      j["probability"] = r.probability;
      j["fidelity"] = r.fidelity;
      j["success"] = r.na == nx;
      os << j.dump() << '\n';
    }
  }
  const auto& s = batch.summary;
  const double runs = static_cast<double>(s.runs);
  Json j;
  j["type"] = "summary";
  j["schema"] = nc2ent::io::kSchema;
  j["seed"] = seed;
  j["K"] = in.levels();
  j["N"] = in.particles();
  j["target"] = {nx, ny};
  j["r"] = nc2ent::io::to_json(w.r);
  j["t"] = nc2ent::io::to_json(w.t);
  j["max_rounds"] = a.max_rounds;
  j["runs"] = s.runs;
  j["successes"] = s.successes;
  j["success_rate"] = nullable(s.runs == 0 ? NAN : static_cast<double>(s.successes) / runs);
  j["first_round_successes"] = s.first_round_successes;
  j["first_round_probability"] = ms::sector_weight(in.particles(), nx, w);
  j["mean_rounds"] = nullable(s.successes == 0 ? NAN : s.mean_rounds);
  j["min_fidelity"] = nullable(s.successes == 0 ? NAN : s.min_fidelity);
  j["mean_fidelity"] = nullable(s.successes == 0 ? NAN : s.mean_fidelity);
  os << j.dump() << '\n';
  emit(a.out, os.str());
  return 0;
}

// ---- witness ---------------------------------------------------------------

struct WitnessArgs {
  std::string states;
  std::optional<double> epsilon;
  std::string target;
  std::vector<std::string> tests;
  std::size_t samples = 10000;
  std::optional<std::uint64_t> seed;
  bool normalize = false;
  std::string witness_out;
  std::string out;
};

int run_witness(const WitnessArgs& a, std::uint64_t seed, const std::string& echo) {
  namespace wi = nc2ent::witness;
  const auto set = nc2ent::io::read_state_set(a.states, a.normalize);
  const nc2ent::ClassicalSet cs(set.states);
  const std::size_t d = cs.dim();
  const double eps = a.epsilon.value_or(nc2ent::default_epsilon(cs));
  const nc2ent::Conversion conv = nc2ent::build_conversion(cs, nc2ent::make_split(cs, eps));
  const nc2ent::StateVector target = input_state(a.target, "", d, a.normalize);
  const wi::Pipeline pipe = wi::non_classicality_witness(conv, target);

  Json j;
  j["schema"] = nc2ent::io::kSchema;
  j["command"] = echo;
  j["seed"] = seed;
  j["epsilon"] = eps;
  j["target_output_schmidt"] = schmidt_json(nc2ent::schmidt_decompose(nc2ent::convert_state(conv, target), d, d));
  j["min_product_expectation"] = wi::min_product_expectation(pipe.entanglement, d, d, a.samples, seed);
  j["product_samples"] = a.samples;
  j["min_classical_expectation"] = wi::min_classical_expectation(pipe.non_classicality, cs);
  Json tests = Json::array();
  std::vector<std::string> all{a.target};
  all.insert(all.end(), a.tests.begin(), a.tests.end());
  for (const auto& text : all) {
    const nc2ent::StateVector psi = input_state(text, "", d, a.normalize);
    const wi::Detection det = wi::detect(pipe.non_classicality, psi);
    Json t;
    t["state"] = nc2ent::io::to_json(psi.amplitudes());
    t["c_rank"] = nc2ent::c_rank(psi, cs);
    t["value"] = det.value;
    t["verdict"] = det.detected ? "non-classical detected" : "not detected";
    tests.push_back(t);
  }
  j["tests"] = tests;
  if (!a.witness_out.empty()) {
    nc2ent::io::write_text_file(a.witness_out, dump(nc2ent::io::witness_to_json(pipe.non_classicality, {d})));
  }
  emit(a.out, dump(j));
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;
  std::string out;
};

int run_verify(const VerifyArgs& a, std::uint64_t seed, const std::string& echo) {
  if (a.trials == 0) throw UsageError("--trials must be at least 1");
  const nc2ent::verify::Options opts{seed, a.trials};
  const auto checks = nc2ent::verify::run_suite(a.suite, opts);
  for (const auto& c : checks) std::cout << nc2ent::verify::format_line(c) << '\n';
  const bool ok = nc2ent::verify::all_pass(checks);

  Json j;
  j["schema"] = nc2ent::io::kSchema;
  j["command"] = echo;
  j["suite"] = a.suite;
  j["seed"] = seed;
  j["trials"] = a.trials;
  j["tolerances"] = tolerances();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["id"] = c.id;
    e["title"] = c.title;
    e["pass"] = c.pass;
    e["observed"] = nullable(c.observed);
    e["bound"] = c.bound;
    e["detail"] = c.detail;
    list.push_back(e);
  }
  j["checks"] = list;
  j["pass"] = ok;
  if (!a.out.empty()) nc2ent::io::write_text_file(a.out, dump(j));
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convert single-system non-classicality into bipartite entanglement"};
  app.require_subcommand(1);
  const std::string echo = command_echo(argc, argv);

  ConvertArgs ca;
  auto* convert = app.add_subcommand("convert", "Convert a state through the conversion unitary of a classical set");
  convert->add_option("--states", ca.states, "StateSetFile (JSON)")->required()->check(CLI::ExistingFile);
  convert->add_option("--epsilon", ca.epsilon, "Splitting parameter (default eps_max / 2)");
  convert->add_option("--input", ca.input, "Input amplitudes as a JSON array");
  convert->add_option("--input-file", ca.input_file, "JSON file holding the input amplitudes");
  convert->add_flag("--normalize", ca.normalize, "Rescale non-normalized states");
  convert->add_option("--out", ca.out, "Output JSON file (default stdout)");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "GCNOT output entanglement over a (theta, mu) grid, as CSV");
  sweep->add_option("--theta-range", sa.theta_range, "A:B:n (default 0.01:pi-0.01:64)");
  sweep->add_option("--mu-range", sa.mu_range, "A:B:n with mu = 1/(1+eps)")->capture_default_str();
  sweep->add_option("--input", sa.input, "Input basis state 0 or 1")->check(CLI::IsMember({0, 1}))->capture_default_str();
  sweep->add_flag("--degrees", sa.degrees, "Read theta in degrees");
  sweep->add_flag("--no-optimum", sa.no_optimum, "Do not insert the per-theta optimum");
  sweep->add_option("--out", sa.out, "Output CSV file (default stdout)");

  ModesplitArgs ma;
  auto* modesplit = app.add_subcommand("modesplit", "Monte-Carlo of the mode-splitting protocol, as JSON lines");
  modesplit->add_option("--K", ma.levels, "Internal levels")->check(CLI::Range(2, nc2ent::sym::kMaxLevels))->capture_default_str();
  modesplit->add_option("--N", ma.particles, "Particles")->check(CLI::Range(2, nc2ent::sym::kMaxParticles))->capture_default_str();
  modesplit->add_option("--target", ma.target, "NX:NY")->capture_default_str();
  modesplit->add_option("--r", ma.r, "Reflection amplitude (number or [re, im])");
  modesplit->add_option("--t", ma.t, "Transmission amplitude (number or [re, im])");
  modesplit->add_option("--phi", ma.phi, "Phase of t when only --r is given")->capture_default_str();
  modesplit->add_option("--runs", ma.runs, "Independent runs")->capture_default_str();
  modesplit->add_option("--max-rounds", ma.max_rounds, "Rounds before a run counts as failed")->capture_default_str();
  modesplit->add_option("--seed", ma.seed, "Seed (default NC2ENT_SEED or 20260101)");
  modesplit->add_option("--input-file", ma.input_file, "Superposition of coherent states (JSON)")->check(CLI::ExistingFile);
  modesplit->add_option("--out", ma.out, "Output JSONL file (default stdout)");

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "Turn an entanglement witness into a non-classicality witness");
  witness->add_option("--states", wa.states, "StateSetFile (JSON)")->required()->check(CLI::ExistingFile);
  witness->add_option("--epsilon", wa.epsilon, "Splitting parameter (default eps_max / 2)");
  witness->add_option("--target-state", wa.target, "State whose converted image defines W")->required();
  witness->add_option("--test-state", wa.tests, "State to test (repeatable)")->allow_extra_args(false);
  witness->add_option("--samples", wa.samples, "Random product states for the witness check")->capture_default_str();
  witness->add_option("--seed", wa.seed, "Seed (default NC2ENT_SEED or 20260101)");
  witness->add_flag("--normalize", wa.normalize, "Rescale non-normalized states");
  witness->add_option("--witness-out", wa.witness_out, "Write the non-classicality witness as JSON");
  witness->add_option("--out", wa.out, "Output JSON file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suites");
  verify->add_option("--suite", va.suite, "Suite to run")
      ->check(CLI::IsMember(nc2ent::verify::suites()))
      ->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed (default NC2ENT_SEED or 20260101)");
  verify->add_option("--trials", va.trials, "Trials per property (100 = full)")->capture_default_str();
  verify->add_option("--out", va.out, "Write the JSON run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const std::uint64_t env_seed = default_seed();
    if (*convert) return run_convert(ca, echo);
    if (*sweep) return run_sweep(sa);
    if (*modesplit) return run_modesplit(ma, ma.seed.value_or(env_seed));
    if (*witness) return run_witness(wa, wa.seed.value_or(env_seed), echo);
    if (*verify) return run_verify(va, va.seed.value_or(env_seed), echo);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nc2ent::DependentSetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
