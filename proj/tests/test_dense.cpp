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

#include <cmath>
#include <complex>

#include "stablearn/dense.hpp"
#include "stablearn/random_targets.hpp"
#include "stablearn/rng.hpp"

using namespace stablearn;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("elementary gate actions") {
  StateVector s(1, 0);
  apply_gate_dense(s, Gate(GateKind::H, 0));
  CHECK(std::abs(s.amps[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s.amps[1] - kInvSqrt2) < 1e-15);
  apply_gate_dense(s, Gate(GateKind::T, 0));
  CHECK(std::abs(s.amps[1] - kInvSqrt2 * std::exp(std::complex<double>(0, M_PI / 4))) <
        1e-15);
  StateVector t(2, 1);  // |q0=1, q1=0>
  apply_gate_dense(t, Gate(GateKind::CX, 0, 1));
  CHECK(std::abs(t.amps[3] - 1.0) < 1e-15);
  StateVector u(2, 3);
  apply_gate_dense(u, Gate(GateKind::CZ, 0, 1));
  CHECK(std::abs(u.amps[3] + 1.0) < 1e-15);
  StateVector w(2, 1);
  apply_gate_dense(w, Gate(GateKind::SWAP, 0, 1));
  CHECK(std::abs(w.amps[2] - 1.0) < 1e-15);
}

TEST_CASE("run_circuit respects little-endian input bits") {
  Circuit c(2);
  c.gates.emplace_back(GateKind::X, 1);
  BitVec in(2);
  in.set(0, true);
  StateVector s = run_circuit(c, in);
  CHECK(std::abs(s.amps[3] - 1.0) < 1e-15);
}

TEST_CASE("apply_pauli_dense matches the phase convention") {
  // Y|0> = i|1>, Y|1> = -i|0>.
  StateVector s(1, 0);
  StateVector ys = apply_pauli_dense(s, parse_pauli("Y"));
  CHECK(std::abs(ys.amps[1] - std::complex<double>(0, 1)) < 1e-15);
  StateVector s1(1, 1);
  StateVector ys1 = apply_pauli_dense(s1, parse_pauli("Y"));
  CHECK(std::abs(ys1.amps[0] - std::complex<double>(0, -1)) < 1e-15);
  // -iY = XZ as matrices.
  StateVector a = apply_pauli_dense(s, parse_pauli("-iY"));
  StateVector b = apply_pauli_dense(apply_pauli_dense(s, parse_pauli("Z")),
                                    parse_pauli("X"));
  CHECK(std::abs(a.amps[1] - b.amps[1]) < 1e-15);
}

TEST_CASE("pauli products agree with dense composition") {
  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    SignedPauli a(2), b(2);
    for (std::size_t j = 0; j < 2; ++j) {
      a.word.z.set(j, rng.bit());
      a.word.x.set(j, rng.bit());
      b.word.z.set(j, rng.bit());
      b.word.x.set(j, rng.bit());
    }
    a.phase = static_cast<std::uint8_t>(rng.below(4));
    b.phase = static_cast<std::uint8_t>(rng.below(4));
    SignedPauli ab = multiply(a, b);
    for (std::size_t basis = 0; basis < 4; ++basis) {
      StateVector s(2, basis);
      StateVector lhs = apply_pauli_dense(apply_pauli_dense(s, b), a);
      StateVector rhs = apply_pauli_dense(s, ab);
      for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(lhs.amps[i] - rhs.amps[i]) < 1e-14);
    }
  }
}

TEST_CASE("expectation values") {
  StateVector zero(1, 0);
  CHECK(pauli_expectation(zero, parse_pauli("Z")) == doctest::Approx(1.0));
  CHECK(pauli_expectation(zero, parse_pauli("X")) == doctest::Approx(0.0));
  Circuit c(1);
  c.gates.emplace_back(GateKind::H, 0);
  c.gates.emplace_back(GateKind::T, 0);
  StateVector plusT = run_circuit(c, BitVec(1));
  CHECK(pauli_expectation(plusT, parse_pauli("X")) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(pauli_expectation(plusT, parse_pauli("Y")) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(pauli_expectation(plusT, parse_pauli("Z")) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bell distribution of a product stabilizer state") {
  // psi = |0>: psi x psi Bell outcomes are uniform over {I, Z} (per qubit).
  StateVector zero(1, 0);
  auto table = bell_distribution(zero, zero);
  double pi = 0, pz = 0, rest = 0;
  for (const auto& [w, pr] : table) {
    if (w.is_identity())
      pi = pr;
    else if (w == parse_pauli("Z").word)
      pz = pr;
    else
      rest += pr;
  }
  CHECK(pi == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pz == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rest == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bell distribution normalizes for generic states") {
  Rng rng(31);
  Circuit c = random_clifford_circuit(3, rng);
  c.gates.emplace_back(GateKind::T, 1);
  StateVector psi = run_circuit(c, BitVec(3));
  auto table = bell_distribution(conjugate_state(psi), psi);
  double total = 0;
  for (const auto& [w, pr] : table) {
    CHECK(pr >= -1e-15);
    total += pr;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unitary reconstruction and phase comparison") {
  Circuit h(1);
  h.gates.emplace_back(GateKind::H, 0);
  DenseMatrix m = reconstruct_unitary(h);
  CHECK(std::abs(m[0][0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(m[0][1] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(m[1][0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(m[1][1] + kInvSqrt2) < 1e-15);
  DenseMatrix g = m;
  std::complex<double> ph = std::exp(std::complex<double>(0, 1.234));
  for (auto& row : g)
    for (auto& x : row) x *= ph;
  CHECK(compare_unitaries_up_to_phase(m, g, 1e-12));
  g[0][0] = -g[0][0];
  CHECK(!compare_unitaries_up_to_phase(m, g, 1e-12));
}

TEST_CASE("equal_up_to_global_phase") {
  StateVector a(1, 0), b(1, 0);
  b.amps[0] = std::exp(std::complex<double>(0, 0.7));
  CHECK(equal_up_to_global_phase(a, b, 1e-12));
  b.amps[0] = 0.9;
  CHECK(!equal_up_to_global_phase(a, b, 1e-6));
}
