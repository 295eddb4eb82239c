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

#include <doctest.h>

#include "stablearn/dense.hpp"
#include "stablearn/frame.hpp"
#include "stablearn/random_targets.hpp"
#include "stablearn/rng.hpp"

using namespace stablearn;

TEST_CASE("basis and plus state frames") {
  BitVec v(2);
  v.set(1, true);
  PauliFrame f = frame_of_basis_state(v);
  CHECK(format_pauli(f.rows[0]) == "ZI");
  CHECK(format_pauli(f.rows[1]) == "-IZ");
  PauliFrame g = frame_of_plus_state(v);
  CHECK(format_pauli(g.rows[0]) == "XI");
  CHECK(format_pauli(g.rows[1]) == "-IX");
  f.check_invariants();
  g.check_invariants();
}

TEST_CASE("single-gate conjugation table") {
  auto image = [](GateKind k, const char* p) {
    SignedPauli sp = parse_pauli(p);
    std::size_t nq = sp.word.n;
    Gate g = nq == 1 ? Gate(k, 0) : Gate(k, 0, 1);
    conjugate_by_gate(sp, g);
    return format_pauli(sp);
  };
  CHECK(image(GateKind::H, "X") == "Z");
  CHECK(image(GateKind::H, "Z") == "X");
  CHECK(image(GateKind::H, "Y") == "-Y");
  CHECK(image(GateKind::S, "X") == "Y");
  CHECK(image(GateKind::S, "Y") == "-X");
  CHECK(image(GateKind::S, "Z") == "Z");
  CHECK(image(GateKind::Sdg, "X") == "-Y");
  CHECK(image(GateKind::X, "Z") == "-Z");
  CHECK(image(GateKind::X, "Y") == "-Y");
  CHECK(image(GateKind::Z, "X") == "-X");
  CHECK(image(GateKind::Y, "X") == "-X");
  CHECK(image(GateKind::Y, "Y") == "Y");
  CHECK(image(GateKind::CX, "XI") == "XX");
  CHECK(image(GateKind::CX, "IX") == "IX");
  CHECK(image(GateKind::CX, "IZ") == "ZZ");
  CHECK(image(GateKind::CX, "ZI") == "ZI");
  CHECK(image(GateKind::CZ, "XI") == "XZ");
  CHECK(image(GateKind::CZ, "IX") == "ZX");
  CHECK(image(GateKind::SWAP, "XZ") == "ZX");
}

TEST_CASE("conjugation matches the dense simulator") {
  // U sigma U^dag |b> computed both ways, for a gate soup on 3 qubits.
  Rng rng(17);
  Circuit c = random_clifford_circuit(3, rng);
  for (const char* p : {"XIZ", "YYI", "IZX", "ZZZ"}) {
    SignedPauli sp = parse_pauli(p);
    for (const auto& g : c.gates) conjugate_by_gate(sp, g);
    for (std::size_t b = 0; b < 8; ++b) {
      BitVec in(3);
      for (std::size_t j = 0; j < 3; ++j) in.set(j, (b >> j) & 1);
      StateVector psi = run_circuit(c, in);
      StateVector lhs = apply_pauli_dense(psi, sp);
      StateVector rhs = apply_pauli_dense(StateVector(3, b), parse_pauli(p));
      for (const auto& gg : c.gates) apply_gate_dense(rhs, gg);
      for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(lhs.amps[i] - rhs.amps[i]) < 1e-12);
    }
  }
}

TEST_CASE("frame evolution agrees with dense states") {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 2 + rng.below(3);
    Circuit c = random_clifford_circuit(n, rng);
    BitVec in(n);
    for (std::size_t j = 0; j < n; ++j) in.set(j, rng.bit());
    PauliFrame f = frame_of_basis_state(in);
    f.apply_circuit(c);
    f.check_invariants();
    StateVector ref = run_circuit(c, in);
    CHECK(equal_up_to_global_phase(dense_from_frame(f), ref, 1e-10));
    for (const auto& row : f.rows)
      CHECK(pauli_expectation(ref, row) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("deterministic and random measurements") {
  BitVec zero(1);
  Rng rng(3);
  PauliFrame f = frame_of_basis_state(zero);
  CHECK(f.measure_pauli(parse_pauli("Z"), rng) == 1);
  SignedPauli mz = parse_pauli("-Z");
  CHECK(f.measure_pauli(mz, rng) == -1);
  CHECK(f.group_expectation(parse_pauli("Z")) == 1);
  CHECK(f.group_expectation(parse_pauli("-Z")) == -1);
  CHECK(f.group_expectation(parse_pauli("X")) == 0);
  int first = f.measure_pauli(parse_pauli("X"), rng);
  // Collapsed onto the X eigenstate: repeats are deterministic.
  for (int i = 0; i < 5; ++i) CHECK(f.measure_pauli(parse_pauli("X"), rng) == first);
  CHECK(f.group_expectation(parse_pauli("X")) == first);
}

TEST_CASE("measurement statistics match Born probabilities") {
  // |+> measured in Z: empirical mean near 0.
  Rng rng(41);
  int sum = 0;
  const int shots = 4000;
  for (int i = 0; i < shots; ++i) {
    PauliFrame f = frame_of_plus_state(BitVec(1));
    sum += f.measure_pauli(parse_pauli("Z"), rng);
  }
  CHECK(std::abs(sum) < 4 * std::sqrt(double(shots)));
}

TEST_CASE("canonical form identifies equal groups") {
  // {ZZ, XX} and {-YY, XX} generate the same group.
  PauliFrame a(2), b(2);
  a.rows = {parse_pauli("ZZ"), parse_pauli("XX")};
  b.rows = {parse_pauli("-YY"), parse_pauli("XX")};
  PauliFrame ca = canonical_form(a), cb = canonical_form(b);
  REQUIRE(ca.rows.size() == cb.rows.size());
  for (std::size_t i = 0; i < ca.rows.size(); ++i) CHECK(ca.rows[i] == cb.rows[i]);
  PauliFrame c(2);
  c.rows = {parse_pauli("ZZ"), parse_pauli("-XX")};
  PauliFrame cc = canonical_form(c);
  bool same = true;
  for (std::size_t i = 0; i < ca.rows.size(); ++i)
    if (!(ca.rows[i] == cc.rows[i])) same = false;
  CHECK(!same);
}
