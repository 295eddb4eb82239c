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

#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

/// Conjugates p in place by the given Clifford gate: p <- g p g^dagger,
/// with exact sign tracking. Throws on T.
void conjugate_by_gate(SignedPauli& p, const Gate& g);

/// Pauli frame of a stabilizer state: n commuting independent signed
/// generators. No destabilizers are stored.
struct PauliFrame {
  std::size_t n = 0;
  std::vector<SignedPauli> rows;

  PauliFrame() = default;
  explicit PauliFrame(std::size_t n_) : n(n_) {}

  void apply_gate(const Gate& g);
  void apply_circuit(const Circuit& c);

  /// Measurement of Hermitian p; deterministic when +/-p is in the group,
  /// otherwise one RNG draw and the standard anticommuting-row repair.
  int measure_pauli(const SignedPauli& p, Rng& rng);

  /// +1 / -1 if +/-p is in the stabilizer group, 0 otherwise.
  int group_expectation(const SignedPauli& p) const;

  std::size_t x_rank() const;

  /// Checks independence, commutativity and -I exclusion.
  void check_invariants() const;
};

PauliFrame frame_of_basis_state(const BitVec& v);

/// Frame of H^{x n}|v>: rows (-1)^{v_i} X_i.
PauliFrame frame_of_plus_state(const BitVec& v);

/// Unique representative per stabilizer group: signed RREF over the
/// [z | x] bit rows with exact sign propagation.
PauliFrame canonical_form(const PauliFrame& f);

}  // namespace stablearn
