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
#include <vector>

#include "stablearn/gf2.hpp"
#include "stablearn/oracle.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

struct CliffordLearnStats {
  std::size_t z_attempts = 0;
  std::size_t x_attempts = 0;
  std::uint64_t copies = 0;  // ledger total at return
};

/// Single-pass budget (Bell harvest + sign fixes + basis probes); two passes
/// make the full run budget 2n^2 + 10n + 4.
inline std::uint64_t clifford_pass_budget(std::size_t n) {
  return 2 * (2 * n + 1) + n + n * n;
}
inline std::uint64_t clifford_budget(std::size_t n) {
  return 2 * clifford_pass_budget(n);
}

/// Bell measurements on copies of U|input> (or U H^n |input>): one reference
/// outcome, then words (XORed by the reference) until they reach rank n, one
/// sign-fixing Pauli measurement per generator. At most max_words words are
/// drawn (0 means the default 2n); RankDeficient if they never span.
std::vector<SignedPauli> learn_stabilizer_group(OracleSession& o,
                                                const BitVec& input,
                                                bool xbasis, Rng& rng,
                                                std::size_t max_words = 0);

/// b_{i,j} = 1 iff g_i measures -1 on the target output for basis input e_j.
BitMatrix probe_signs(OracleSession& o, const std::vector<SignedPauli>& gens,
                      bool xbasis, Rng& rng);

/// Images prod_j gens_j^{d_{i,j}} with d = B^{-1}, signs exact.
std::vector<SignedPauli> solve_images(const std::vector<SignedPauli>& gens,
                                      const BitMatrix& b);

/// Full run: Z pass, X pass, consistency check, synthesis. Early-stopped
/// harvests bank unused copies so an unlucky pass can draw extra Bell words;
/// the ledger never exceeds clifford_budget(n).
Circuit learn_clifford(OracleSession& o, Rng& rng,
                       CliffordLearnStats* stats = nullptr);

}  // namespace stablearn
