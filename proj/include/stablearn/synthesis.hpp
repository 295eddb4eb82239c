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

#include <optional>
#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Conjugation images of X_i (all n wires) and Z_j (first t wires) under a
/// Clifford unitary, signs included.
struct PartialTableau {
  std::size_t n = 0;
  std::vector<SignedPauli> x_images;
  std::vector<SignedPauli> z_images;  // size t <= n

  void check(bool full) const;  // commutation relations of Eq. (2)
};

using Tableau = PartialTableau;  // full when z_images.size() == n

Tableau tableau_of(const Circuit& c);

/// Symplectic completion of the missing z-rows (deterministic GF(2) solve).
Tableau complete_tableau(const PartialTableau& p);

/// Variant with an explicit mask of which z-rows are provided; provided
/// entries are engaged, missing ones completed.
Tableau complete_tableau_masked(
    std::size_t n, const std::vector<SignedPauli>& x_images,
    const std::vector<std::optional<SignedPauli>>& z_images);

/// Clifford circuit C with C X_i C^dag = x_images[i] and
/// C Z_i C^dag = z_images[i], signs included. Gates from {H,S,Sdg,X,Z,CX}.
Circuit synthesize(const Tableau& t);

/// Circuit for C o (I x T^k on the last k wires) o S^s o H^n.
Circuit assemble_tdepth1(const Circuit& c, const std::vector<int>& s,
                         std::size_t k);

/// Inverse of a Clifford circuit (reversed gates, S <-> Sdg).
Circuit invert_clifford(const Circuit& c);

bool tableau_equal(const Tableau& a, const Tableau& b);

}  // namespace stablearn
