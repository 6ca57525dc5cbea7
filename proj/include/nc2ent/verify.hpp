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

#include <cstdint>
#include <string>
#include <vector>

namespace nc2ent::verify {

struct Check {
  std::string id;     // "1", "8b", ...
  std::string title;
  bool pass = false;
  /// Worst observed value of the checked quantity.
  double observed = 0.0;
  /// Bound it is compared against.
  double bound = 0.0;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 20260101;
  /// Trials per property; 100 is the full suite. Sample counts scale linearly
  /// (never below one).
  std::size_t trials = 100;
};

/// all, theorem2, theorem3, modesplit, gcnot, witness.
const std::vector<std::string>& suites();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, const Options& opts);

std::vector<Check> theorem2_checks(const Options& opts);
std::vector<Check> gcnot_checks(const Options& opts);
std::vector<Check> theorem3_checks(const Options& opts);
std::vector<Check> modesplit_checks(const Options& opts);
std::vector<Check> witness_checks(const Options& opts);

bool all_pass(const std::vector<Check>& checks);

/// "PASS  [id] title  (observed ... vs bound ...)".
std::string format_line(const Check& c);

}  // namespace nc2ent::verify
