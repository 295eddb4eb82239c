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

#include <complex>
#include <map>
#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/frame.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Exact statevector; basis index bit i = qubit i (little-endian).
struct StateVector {
  std::size_t n = 0;
  std::vector<std::complex<double>> amps;

  StateVector() = default;
  StateVector(std::size_t n_, std::size_t basis)
      : n(n_), amps(std::size_t{1} << n_, 0.0) {
    amps[basis] = 1.0;
  }
};

inline constexpr std::size_t kDenseMaxQubits = 14;
inline constexpr std::size_t kBellTableMaxQubits = 7;
inline constexpr std::size_t kUnitaryMaxQubits = 3;

StateVector run_circuit(const Circuit& c, const BitVec& input);
void apply_gate_dense(StateVector& s, const Gate& g);

StateVector conjugate_state(const StateVector& s);

/// sigma_p |s>, including the i^phase factor.
StateVector apply_pauli_dense(const StateVector& s, const SignedPauli& p);

double pauli_expectation(const StateVector& s, const SignedPauli& p);

/// Pr(r) = |<Phi+|^n (I x sigma_r) |a>|b>|^2 over all 4^n words r.
std::map<PauliWord, double> bell_distribution(const StateVector& a,
                                              const StateVector& b);

std::complex<double> inner_product(const StateVector& a, const StateVector& b);
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol);

using DenseMatrix = std::vector<std::vector<std::complex<double>>>;
DenseMatrix reconstruct_unitary(const Circuit& c);
bool compare_unitaries_up_to_phase(const DenseMatrix& a, const DenseMatrix& b,
                                   double tol);

/// Statevector stabilized by the frame (deterministic phase convention:
/// built from the first basis vector with nonzero projection).
StateVector dense_from_frame(const PauliFrame& f);

}  // namespace stablearn
