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
#include <map>
#include <memory>
#include <string>
#include <tuple>

#include "stablearn/circuit.hpp"
#include "stablearn/dense.hpp"
#include "stablearn/expanded_frame.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

/// Hidden target behind the oracle boundary.
struct TargetSpec {
  enum class Kind { Clifford, TDepth1 };
  Kind kind = Kind::Clifford;
  std::size_t n = 0;
  Circuit circuit;  // Clifford kind
  Circuit c1;       // TDepth1 kind: U = c2 T^v c1
  BitVec v;
  Circuit c2;

  static TargetSpec clifford(Circuit c);
  static TargetSpec tdepth1(Circuit c1, BitVec v, Circuit c2);

  std::size_t k() const { return v.popcount(); }

  /// Flat gate list (for the dense reference / verifier only).
  Circuit flat() const;
};

struct QueryLedger {
  std::uint64_t copies_prepared = 0;
};

enum class Backend { Frame, Dense };

/// Single-use handle to one prepared copy of U|input> (or U H^n |input>).
struct StateCopy {
  std::uint64_t id = 0;
  std::uint64_t prep_key = 0;
  bool consumed = false;
};

/// One oracle session: a hidden target, a backend and a query ledger.
/// Learners see only prepare/measure; the verifier may read the spec.
class OracleSession {
 public:
  OracleSession(TargetSpec target, Backend backend);

  std::size_t n() const { return target_.n; }
  Backend backend() const { return backend_; }
  const QueryLedger& ledger() const { return ledger_; }

  /// xbasis folds a pre-layer H^n in front of the target's input.
  StateCopy prepare(const BitVec& input, bool xbasis = false);

  PauliWord bell_measure(StateCopy& a, StateCopy& b, Rng& rng);
  int pauli_measure(StateCopy& a, const SignedPauli& p, Rng& rng);

  /// Exact distributions (verification / CLI surface, not a learner API).
  /// conj = true gives the psi* x psi table (no r0 shift).
  std::map<PauliWord, double> exact_bell_distribution(const BitVec& input,
                                                      bool xbasis = false,
                                                      bool conj = false);
  double exact_pr_plus(const BitVec& input, const SignedPauli& p,
                       bool xbasis = false);

  /// Verifier-only access.
  const TargetSpec& spec_for_verifier() const { return target_; }

 private:
  struct Prep {
    ExpandedFrame frame;   // frame backend
    PauliWord r0;          // bell shift
    StateVector dense;     // dense backend
  };
  const Prep& prep_for(const BitVec& input, bool xbasis);
  static std::uint64_t key_of(const BitVec& input, bool xbasis);

  TargetSpec target_;
  Backend backend_;
  QueryLedger ledger_;
  std::uint64_t next_id_ = 1;
  std::map<std::uint64_t, Prep> cache_;
  std::map<std::uint64_t, BitVec> key_inputs_;
  // Memoized Pr(+1) per (prep, operator); the value is exact and fixed, only
  // the sampled outcomes vary.
  std::map<std::tuple<std::uint64_t, BitVec, int>, double> pr_cache_;
};

}  // namespace stablearn
