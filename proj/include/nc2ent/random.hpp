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
#include <random>

#include "nc2ent/linalg.hpp"

namespace nc2ent {

using Rng = std::mt19937_64;

/// Seed for the `index`-th independent substream of `seed` (splitmix64 mix).
/// Parallel loops seed one generator per item so results do not depend on the
/// thread schedule.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

cplx complex_gaussian(Rng& rng);

/// Vector of i.i.d. standard complex Gaussians (unnormalized).
Vector gaussian_vector(std::size_t dim, Rng& rng);

/// Uniformly (unitarily invariant) distributed pure state.
StateVector random_state(std::size_t dim, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of diag(R) moved into Q.
Matrix haar_unitary(std::size_t dim, Rng& rng);

}  // namespace nc2ent
