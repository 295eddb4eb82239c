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

#include "stablearn/circuit.hpp"

#include "stablearn/errors.hpp"

namespace stablearn {

bool gate_is_clifford(GateKind k) { return k != GateKind::T; }

bool gate_is_two_qubit(GateKind k) {
  return k == GateKind::CX || k == GateKind::CZ || k == GateKind::SWAP;
}

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::Sdg:
      return "Sdg";
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::CX:
      return "CX";
    case GateKind::CZ:
      return "CZ";
    case GateKind::SWAP:
      return "SWAP";
    case GateKind::T:
      return "T";
  }
  throw Error("gate_name: bad kind");
}

GateKind gate_from_name(const std::string& s) {
  if (s == "H") return GateKind::H;
  if (s == "S") return GateKind::S;
  if (s == "Sdg") return GateKind::Sdg;
  if (s == "X") return GateKind::X;
  if (s == "Y") return GateKind::Y;
  if (s == "Z") return GateKind::Z;
  if (s == "CX") return GateKind::CX;
  if (s == "CZ") return GateKind::CZ;
  if (s == "SWAP") return GateKind::SWAP;
  if (s == "T") return GateKind::T;
  throw Error("unknown gate \"" + s + "\"");
}

bool Circuit::is_clifford() const {
  for (const auto& g : gates)
    if (!gate_is_clifford(g.kind)) return false;
  return true;
}

void Circuit::validate() const {
  for (const auto& g : gates) {
    if (g.q0 >= n) throw Error("circuit: qubit index out of range");
    if (gate_is_two_qubit(g.kind)) {
      if (g.q1 >= n) throw Error("circuit: qubit index out of range");
      if (g.q0 == g.q1) throw Error("circuit: two-qubit gate needs distinct qubits");
    }
  }
}

std::optional<TDepthOne> Circuit::tdepth1_split() const {
  TDepthOne out;
  out.c1 = Circuit(n);
  out.c2 = Circuit(n);
  out.v = BitVec(n);
  int stage = 0;  // 0: c1, 1: T stage, 2: c2
  for (const auto& g : gates) {
    if (g.kind == GateKind::T) {
      if (stage == 2) return std::nullopt;
      if (out.v.get(g.q0)) return std::nullopt;  // two T's on one wire
      out.v.set(g.q0, true);
      stage = 1;
    } else {
      if (stage == 1) stage = 2;
      (stage == 0 ? out.c1 : out.c2).gates.push_back(g);
    }
  }
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit c(a.n);
  c.gates = a.gates;
  c.gates.insert(c.gates.end(), b.gates.begin(), b.gates.end());
  return c;
}

}  // namespace stablearn
