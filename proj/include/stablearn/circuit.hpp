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
#include <optional>
#include <string>
#include <vector>

#include "stablearn/bits.hpp"

namespace stablearn {

enum class GateKind { H, S, Sdg, X, Y, Z, CX, CZ, SWAP, T };

bool gate_is_clifford(GateKind k);
bool gate_is_two_qubit(GateKind k);
std::string gate_name(GateKind k);
GateKind gate_from_name(const std::string& s);

struct Gate {
  GateKind kind;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  // second index for CX/CZ/SWAP only

  Gate(GateKind k, std::size_t a) : kind(k), q0(a) {}
  Gate(GateKind k, std::size_t a, std::size_t b) : kind(k), q0(a), q1(b) {}
};

struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n_) : n(n_) {}

  bool is_clifford() const;
  void validate() const;  // index range, distinct two-qubit indices

  /// Structural T-depth-one split: gates partition as Clifford prefix, one
  /// stage of T gates on distinct qubits, Clifford suffix. nullopt otherwise.
  std::optional<struct TDepthOne> tdepth1_split() const;
};

struct TDepthOne {
  Circuit c1;
  BitVec v;  // T positions
  Circuit c2;
};

/// Concatenates b after a.
Circuit concat(const Circuit& a, const Circuit& b);

}  // namespace stablearn
