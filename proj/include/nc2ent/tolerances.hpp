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

// Numerical thresholds shared across modules. Rank and eigenvalue cuts are
// relative to the largest value unless noted otherwise.
namespace nc2ent::tol {

inline constexpr double kNorm = 1e-12;          // unit-norm check on StateVector
inline constexpr double kHermitian = 1e-12;     // max |G - G^dagger|
inline constexpr double kUnitDiagonal = 1e-12;  // max |G_ii - 1|
inline constexpr double kPsd = 1e-10;           // min eigenvalue >= -kPsd
inline constexpr double kPd = 1e-10;            // min eigenvalue > kPd
inline constexpr double kEigenZero = 1e-12;     // eigenvalues clamped to zero in factor_gram
inline constexpr double kRank = 1e-10;          // relative rank threshold
inline constexpr double kGramMatch = 1e-8;      // Gram equality for unitary synthesis
inline constexpr double kUnitary = 1e-10;       // max |U^dagger U - I|
inline constexpr double kMapping = 1e-8;        // |U from_i - to_i|
inline constexpr double kEntropyCut = 1e-12;    // Schmidt coefficients below are ignored
inline constexpr double kDensity = 1e-10;       // density-operator validation
inline constexpr double kDetect = 1e-10;        // witness / negativity detection threshold

}  // namespace nc2ent::tol
