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
#include <utility>
#include <vector>

#include "stablearn/gf2.hpp"
#include "stablearn/oracle.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

enum class OpLabel {
  NonMember,
  IsotropicPlus,
  IsotropicMinus,
  PrimaryPlus,
  PrimaryMinus,
  ProductM,
};

struct OperatorClassification {
  OpLabel label = OpLabel::NonMember;
  std::size_t m = 0;  // ProductM only
  double empirical_mean = 0.0;
  std::size_t shots = 0;
  bool ambiguous = false;
};

struct TDepth1LearnStats {
  std::size_t attempts = 0;
  std::size_t k = 0;
  std::size_t classifications = 0;
  std::uint64_t copies = 0;  // ledger total at return
};

inline std::size_t classify_shots(std::size_t n) { return 3200 * n; }
inline constexpr std::size_t kDepProbeShots = 200;

/// Per-attempt query budget: Bell harvest, worst-case classification sweep
/// (the 3^k candidate products plus the completion sweep, 4^k in total),
/// isotropic sign fixes, and the basis-dependence probes.
inline std::uint64_t tdepth1_attempt_budget(std::size_t n, std::size_t k) {
  std::uint64_t cls = 1;
  for (std::size_t i = 0; i < k; ++i) cls *= 4;
  return 2 * (8 * n + 1) + classify_shots(n) * cls + (n - k) * (n + 1) +
         2 * kDepProbeShots * k * n;
}
inline std::uint64_t tdepth1_budget(std::size_t n, std::size_t k) {
  return 3 * tdepth1_attempt_budget(n, k);  // at most 3 attempts
}

/// 8n+1 Bell measurements on psi x psi; returns the 8n outcomes XORed with
/// the first one.
std::vector<PauliWord> harvest_bell(OracleSession& o, std::size_t count,
                                    Rng& rng);

/// Rank extraction plus symplectic Gram-Schmidt. k is inferred as rank - n;
/// rank < n throws RankDeficient.
SymplecticSplit split_generators(const std::vector<PauliWord>& words,
                                 std::size_t n);

/// Empirical Pr(+1) over `shots` single-copy measurements of p, mapped to a
/// label with decision gap delta = (sqrt 2 - 1)/4.
OperatorClassification classify_operator(OracleSession& o,
                                         const SignedPauli& p,
                                         std::size_t shots, Rng& rng);

/// Signed primary pairs recovered from the candidate pairs: deterministic
/// 3^k product enumeration with early halt, then a completion sweep over the
/// remaining products (both members of some candidate pair) when the
/// enumeration basis misses a primary. Throws SearchFailed.
std::vector<std::pair<SignedPauli, SignedPauli>> find_primaries(
    OracleSession& o, const std::vector<std::pair<PauliWord, PauliWord>>& cand,
    const std::vector<PauliWord>& isotropic, Rng& rng,
    std::size_t* classifications = nullptr);

/// Full Algorithm-2 run; the returned circuit has shape
/// C o T^k o S^s o H^n o W with W a basis-permutation Clifford learned from
/// per-basis-input sign probes, making the hypothesis match the target on
/// every basis vector (up to a phase per vector), not just on 0^n.
Circuit learn_tdepth1(OracleSession& o, Rng& rng,
                      TDepth1LearnStats* stats = nullptr);

/// Desk-scale (n <= 3) phase alignment: exact Pauli statistics on the
/// H^n-basis preparations pin the per-basis-vector phases of the hypothesis
/// relative to the target; realizable residues (pi/4 per qubit plus CZ
/// couplings) are appended as a diagonal pre-circuit. Returns the input
/// unchanged when the residue cannot be realized in the gate set.
Circuit phase_align(OracleSession& o, const Circuit& hyp);

}  // namespace stablearn
