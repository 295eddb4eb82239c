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
#include <utility>
#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/frame.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Pseudomixture branch weights for one T gadget.
struct PseudomixtureWeights {
  static double alpha1() { return 0.5; }
  static double alpha2();  // (1 - sqrt 2)/2
  static double alpha3();  // sqrt 2 / 2
};

/// One primary symplectic pair (g, h). origin_q is the physical qubit whose
/// T gadget created the pair; it is only meaningful while the T stage is
/// still being built (before trailing Clifford conjugation).
struct PrimaryPair {
  SignedPauli g;
  SignedPauli h;
  std::size_t origin_q = 0;
};

/// Expanded Pauli frame: (n - k̂) isotropic generators plus k̂ primary
/// symplectic pairs describing a T-depth-one output pseudomixture.
struct ExpandedFrame {
  std::size_t n = 0;
  std::vector<SignedPauli> isotropic;
  std::vector<PrimaryPair> pairs;

  std::size_t k_hat() const { return pairs.size(); }

  static ExpandedFrame from_frame(const PauliFrame& f);

  /// Requires k̂ = 0.
  PauliFrame to_frame() const;

  void apply_circuit(const Circuit& c);

  void check_invariants() const;
};

inline constexpr std::size_t kComponentGuardKhat = 12;

/// One postselected T gadget on the given qubit. Creates a pair (Table II),
/// collapses T.T to S on a shared virtual wire, or throws NotRepresentable
/// when the X-dependence is jointly spread across several existing pairs.
ExpandedFrame expand_t_gate(ExpandedFrame e, std::size_t qubit);

/// Frame of C2 T^v C1 |input>.
ExpandedFrame build_tdepth1(const Circuit& c1, const BitVec& v,
                            const Circuit& c2, const BitVec& input);

/// The 3^k̂ pseudomixture components with weights beta_j = prod alpha_{j_i}.
std::vector<std::pair<double, PauliFrame>> component_states(
    const ExpandedFrame& e);

/// Closed-form sum_j beta_j <phi_j| p |phi_j>.
double pseudo_expectation(const ExpandedFrame& e, const SignedPauli& p);

/// Word r0 of the shift operator relating Bell outcomes on psi x psi to
/// those on psi* x psi (Eq. (9) / Lemma 6 normalization).
PauliWord bell_shift(const ExpandedFrame& e);

}  // namespace stablearn
