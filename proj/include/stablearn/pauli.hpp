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

#include <cstdint>
#include <string>

#include "stablearn/bits.hpp"

namespace stablearn {

/// Unsigned n-qubit Pauli word sigma_{z:x} with Y = iXZ sites where both
/// bits are set.
struct PauliWord {
  std::size_t n = 0;
  BitVec z;
  BitVec x;

  PauliWord() = default;
  explicit PauliWord(std::size_t n_) : n(n_), z(n_), x(n_) {}

  bool operator==(const PauliWord& o) const { return z == o.z && x == o.x; }
  bool operator<(const PauliWord& o) const {
    if (z == o.z) return x < o.x;
    return z < o.z;
  }

  bool is_identity() const { return !z.any() && !x.any(); }

  void operator^=(const PauliWord& o) {
    z ^= o.z;
    x ^= o.x;
  }

  /// Letter at qubit i: 0=I, 1=X, 2=Y, 3=Z.
  int site(std::size_t i) const {
    bool zb = z.get(i), xb = x.get(i);
    if (zb && xb) return 2;
    if (xb) return 1;
    if (zb) return 3;
    return 0;
  }

  /// Flattened 2n-bit row [z | x] for GF(2) work.
  BitVec flat() const {
    BitVec r(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (z.get(i)) r.set(i, true);
      if (x.get(i)) r.set(n + i, true);
    }
    return r;
  }

  static PauliWord from_flat(const BitVec& f, std::size_t n) {
    PauliWord p(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (f.get(i)) p.z.set(i, true);
      if (f.get(n + i)) p.x.set(i, true);
    }
    return p;
  }
};

/// Returns 1 iff the words anticommute.
int symplectic_product(const PauliWord& a, const PauliWord& b);

/// Phase-exact signed Pauli: i^phase * sigma_{z:x}, phase mod 4.
/// Hermitian canonical form has phase in {0, 2}.
struct SignedPauli {
  PauliWord word;
  std::uint8_t phase = 0;

  SignedPauli() = default;
  explicit SignedPauli(std::size_t n) : word(n) {}
  SignedPauli(PauliWord w, std::uint8_t p) : word(std::move(w)), phase(p) {}

  bool hermitian() const { return phase == 0 || phase == 2; }
  int sign() const { return phase == 0 ? +1 : -1; }
  void negate() { phase = static_cast<std::uint8_t>((phase + 2) & 3); }

  bool operator==(const SignedPauli& o) const {
    return phase == o.phase && word == o.word;
  }
};

SignedPauli multiply(const SignedPauli& a, const SignedPauli& b);

/// True iff p* = -p (odd number of Y sites), p Hermitian.
bool conjugate_negates(const SignedPauli& p);

SignedPauli parse_pauli(const std::string& text);
std::string format_pauli(const SignedPauli& p);

/// Convenience single-site constructors (sign +1).
SignedPauli pauli_z(std::size_t n, std::size_t q);
SignedPauli pauli_x(std::size_t n, std::size_t q);
SignedPauli pauli_y(std::size_t n, std::size_t q);
SignedPauli pauli_identity(std::size_t n);

}  // namespace stablearn
