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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nc2ent/gcnot.hpp"
#include "nc2ent/linalg.hpp"
#include "nc2ent/symmetric.hpp"
#include "nc2ent/witness.hpp"

namespace nc2ent::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// Input error with a user-facing message.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

/// A number (real) or a [re, im] pair.
cplx parse_complex(const Json& j);
/// JSON array of numbers or [re, im] pairs.
Vector parse_vector(const Json& j);
/// parse_vector on a JSON text.
Vector parse_vector_text(const std::string& text);

Json to_json(cplx z);
Json to_json(const Vector& v);
/// Row-major list of [re, im] entries.
Json matrix_entries(const Matrix& m);

struct StateSet {
  std::size_t dimension = 0;
  std::vector<StateVector> states;
  std::vector<std::string> labels;
};

/// {schema, dimension, states, labels?}. Rows off unit norm by more than 1e-9
/// are rejected unless `normalize`.
StateSet parse_state_set(const Json& j, bool normalize);
StateSet read_state_set(const std::string& path, bool normalize);

/// {schema, K, N, terms: [{single_particle, coefficient}]}: a normalized
/// superposition of symmetric coherent states.
sym::SymmetricState parse_modesplit_input(const Json& j);
sym::SymmetricState read_modesplit_input(const std::string& path);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// theta,mu,epsilon,ebits rows.
void write_sweep_csv(std::ostream& os, const gcnot::Surface& surface);

/// {schema, rows, cols, dims, entries}.
Json witness_to_json(const witness::Witness& w, const std::vector<std::size_t>& dims);

}  // namespace nc2ent::io
