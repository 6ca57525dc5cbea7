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

#include "nc2ent/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "nc2ent/tolerances.hpp"

namespace nc2ent::io {

namespace {

constexpr double kFileNorm = 1e-9;

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing or non-integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) {
    throw FormatError("unsupported schema version " + j.at("schema").dump());
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

cplx parse_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw FormatError("expected a number or a [re, im] pair, got " + j.dump());
}

Vector parse_vector(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("expected a non-empty array of amplitudes");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(j[i]);
  return v;
}

Vector parse_vector_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("cannot parse vector \"" + text + "\": " + e.what());
  }
  return parse_vector(j);
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json matrix_entries(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) out.push_back(to_json(m(i, k)));
  }
  return out;
}

StateSet parse_state_set(const Json& j, bool normalize) {
  check_schema(j);
  StateSet set;
  const int dim = require_int(j, "dimension");
  if (dim < 1) throw FormatError("dimension must be positive");
  set.dimension = static_cast<std::size_t>(dim);
  if (!j.contains("states") || !j.at("states").is_array()) throw FormatError("missing \"states\" array");
  std::size_t row = 0;
  for (const auto& entry : j.at("states")) {
    const Vector v = parse_vector(entry);
    if (static_cast<std::size_t>(v.size()) != set.dimension) {
      throw FormatError("state " + std::to_string(row) + " has length " + std::to_string(v.size()) + ", expected " +
                        std::to_string(dim));
    }
    const double norm = v.norm();
    if (!normalize && std::abs(norm - 1.0) > kFileNorm) {
      throw FormatError("state " + std::to_string(row) + " has norm " + format_double(norm) +
                        " (use --normalize to rescale)");
    }
    if (!(norm > 0.0)) throw FormatError("state " + std::to_string(row) + " is zero");
    set.states.push_back(StateVector::normalized(v));
    ++row;
  }
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) set.labels.push_back(l.get<std::string>());
    if (set.labels.size() != set.states.size()) throw FormatError("labels and states differ in length");
  }
  return set;
}

StateSet read_state_set(const std::string& path, bool normalize) { return parse_state_set(read_json_file(path), normalize); }

sym::SymmetricState parse_modesplit_input(const Json& j) {
  check_schema(j);
  const int levels = require_int(j, "K");
  const int particles = require_int(j, "N");
  if (levels < 2 || levels > sym::kMaxLevels || particles < 1 || particles > sym::kMaxParticles) {
    throw FormatError("K or N out of range");
  }
  if (!j.contains("terms") || !j.at("terms").is_array() || j.at("terms").empty()) {
    throw FormatError("missing \"terms\" array");
  }
  Vector acc = Vector::Zero(static_cast<Eigen::Index>(sym::dicke_dim(levels, particles)));
  for (const auto& term : j.at("terms")) {
    if (!term.contains("single_particle")) throw FormatError("term without \"single_particle\"");
    const Vector u = parse_vector(term.at("single_particle"));
    if (u.size() != levels) throw FormatError("single_particle length differs from K");
    if (!(u.norm() > 0.0)) throw FormatError("single_particle vector is zero");
    const cplx c = term.contains("coefficient") ? parse_complex(term.at("coefficient")) : cplx(1.0);
    acc += c * sym::coherent_state(u / u.norm(), particles).amplitudes();
  }
  if (!(acc.norm() > tol::kNorm)) throw FormatError("superposition vanishes");
  return sym::SymmetricState::normalized(levels, particles, acc);
}

sym::SymmetricState read_modesplit_input(const std::string& path) { return parse_modesplit_input(read_json_file(path)); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed: " + path);
}

void write_sweep_csv(std::ostream& os, const gcnot::Surface& surface) {
  os << "theta,mu,epsilon,ebits\n";
  for (const auto& r : surface.rows) {
    os << format_double(r.theta) << ',' << format_double(r.mu) << ',' << format_double(r.epsilon) << ','
       << format_double(r.ebits) << '\n';
  }
}

Json witness_to_json(const witness::Witness& w, const std::vector<std::size_t>& dims) {
  Json j;
  j["schema"] = kSchema;
  j["label"] = w.label();
  j["rows"] = w.op().rows();
  j["cols"] = w.op().cols();
  j["dims"] = dims;
  j["entries"] = matrix_entries(w.op());
  return j;
}

}  // namespace nc2ent::io
