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
#include <utility>
#include <vector>

#include "stablearn/bits.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

/// Dense GF(2) matrix; rows are bit-packed.
struct BitMatrix {
  std::size_t cols = 0;
  std::vector<BitVec> rows;

  BitMatrix() = default;
  BitMatrix(std::size_t r, std::size_t c) : cols(c), rows(r, BitVec(c)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows[i].set(i, true);
    return m;
  }

  bool get(std::size_t r, std::size_t c) const { return rows[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows[r].set(c, v); }

  bool operator==(const BitMatrix& o) const {
    return cols == o.cols && rows == o.rows;
  }
};

struct RrefResult {
  BitMatrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; leftmost pivot column, lowest-index row,
/// fully deterministic.
RrefResult gf2_rref(const BitMatrix& m);

std::size_t gf2_rank(const BitMatrix& m);

/// Inverse over GF(2); throws Error on a singular input.
BitMatrix gf2_invert(const BitMatrix& m);

BitMatrix gf2_multiply(const BitMatrix& a, const BitMatrix& b);

/// Solves A x = b; free variables are set to 0. nullopt if inconsistent.
std::optional<BitVec> gf2_solve(const BitMatrix& a, const BitVec& b);

/// Expresses t as a GF(2) combination of the given rows; returns the
/// coefficient vector, or nullopt if t is outside the row space.
std::optional<BitVec> gf2_express(const std::vector<BitVec>& rows,
                                  const BitVec& t);

/// Greedy symplectic Gram-Schmidt over Pauli words (spec: symplectic_core).
/// Input must be linearly independent over GF(2).
struct SymplecticSplit {
  std::vector<PauliWord> isotropic;
  std::vector<std::pair<PauliWord, PauliWord>> pairs;
};
SymplecticSplit symplectic_gram_schmidt(const std::vector<PauliWord>& gens);

}  // namespace stablearn
