// Copyright 2026 The stablearn authors
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

#include <cstddef>

#include "stablearn/oracle.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

/// Uniform random word of 20 n^2 elementary Clifford gates (not uniform over
/// the Clifford group).
Circuit random_clifford_circuit(std::size_t n, Rng& rng);

TargetSpec random_clifford_target(std::size_t n, Rng& rng);

struct TDepth1GenStats {
  std::size_t attempts = 0;
  std::size_t rejected_unrepresentable = 0;
  std::size_t rejected_nonuniform = 0;
};

/// Basis-uniform: the expanded frames of all 2^n basis inputs share the same
/// generator words and their signs depend linearly on the input bits.
/// Targets where colliding T gadgets break this are rejected and resampled
/// (checked exhaustively for n <= 10); see also NotRepresentable.
TargetSpec random_tdepth1_target(std::size_t n, std::size_t k, Rng& rng,
                                 TDepth1GenStats* stats = nullptr);

/// The validation predicate used during generation, exposed for tests.
bool target_is_basis_uniform(const TargetSpec& t);

}  // namespace stablearn
