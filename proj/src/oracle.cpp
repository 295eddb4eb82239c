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

#include "stablearn/oracle.hpp"

#include "stablearn/errors.hpp"

namespace stablearn {

TargetSpec TargetSpec::clifford(Circuit c) {
  if (!c.is_clifford()) throw Error("clifford target has a T gate");
  c.validate();
  TargetSpec t;
  t.kind = Kind::Clifford;
  t.n = c.n;
  t.circuit = std::move(c);
  return t;
}

TargetSpec TargetSpec::tdepth1(Circuit c1, BitVec v, Circuit c2) {
  if (!c1.is_clifford() || !c2.is_clifford())
    throw Error("tdepth1 target: c1/c2 must be Clifford");
  if (c1.n != c2.n || v.size() != c1.n)
    throw Error("tdepth1 target: size mismatch");
  c1.validate();
  c2.validate();
  TargetSpec t;
  t.kind = Kind::TDepth1;
  t.n = c1.n;
  t.c1 = std::move(c1);
  t.v = std::move(v);
  t.c2 = std::move(c2);
  return t;
}

Circuit TargetSpec::flat() const {
  if (kind == Kind::Clifford) return circuit;
  Circuit c(n);
  c.gates = c1.gates;
  for (std::size_t q = 0; q < n; ++q)
    if (v.get(q)) c.gates.emplace_back(GateKind::T, q);
  c.gates.insert(c.gates.end(), c2.gates.begin(), c2.gates.end());
  return c;
}

OracleSession::OracleSession(TargetSpec target, Backend backend)
    : target_(std::move(target)), backend_(backend) {
  if (backend_ == Backend::Dense && target_.n > kBellTableMaxQubits)
    throw GuardExceeded("dense backend requires n <= 7");
}

std::uint64_t OracleSession::key_of(const BitVec& input, bool xbasis) {
  if (input.size() > 62) throw GuardExceeded("oracle: n > 62");
  std::uint64_t k = xbasis ? (std::uint64_t{1} << 63) : 0;
  for (std::size_t i = 0; i < input.size(); ++i)
    if (input.get(i)) k |= std::uint64_t{1} << i;
  return k;
}

const OracleSession::Prep& OracleSession::prep_for(const BitVec& input,
                                                   bool xbasis) {
  std::uint64_t key = key_of(input, xbasis);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  Prep p;
  PauliFrame start =
      xbasis ? frame_of_plus_state(input) : frame_of_basis_state(input);
  if (target_.kind == TargetSpec::Kind::Clifford) {
    PauliFrame f = start;
    f.apply_circuit(target_.circuit);
    p.frame = ExpandedFrame::from_frame(f);
  } else {
    PauliFrame f = start;
    f.apply_circuit(target_.c1);
    ExpandedFrame e = ExpandedFrame::from_frame(f);
    for (std::size_t q = 0; q < target_.n; ++q)
      if (target_.v.get(q)) e = expand_t_gate(std::move(e), q);
    e.apply_circuit(target_.c2);
    p.frame = std::move(e);
  }
  p.r0 = bell_shift(p.frame);

  if (backend_ == Backend::Dense) {
    Circuit c = target_.flat();
    if (xbasis) {
      Circuit pre(c.n);
      for (std::size_t q = 0; q < c.n; ++q) pre.gates.emplace_back(GateKind::H, q);
      c = concat(pre, c);
    }
    p.dense = run_circuit(c, input);
  }
  auto [ins, ok] = cache_.emplace(key, std::move(p));
  (void)ok;
  key_inputs_.emplace(key, input);
  return ins->second;
}

StateCopy OracleSession::prepare(const BitVec& input, bool xbasis) {
  if (input.size() != target_.n) throw Error("prepare: wrong input size");
  prep_for(input, xbasis);
  ++ledger_.copies_prepared;
  StateCopy c;
  c.id = next_id_++;
  c.prep_key = key_of(input, xbasis);
  return c;
}

PauliWord OracleSession::bell_measure(StateCopy& a, StateCopy& b, Rng& rng) {
  if (a.consumed || b.consumed) throw Error("bell_measure: consumed handle");
  if (a.prep_key != b.prep_key)
    throw Error("bell_measure: mismatched provenance");
  a.consumed = b.consumed = true;
  const Prep& p = cache_.at(a.prep_key);

  if (backend_ == Backend::Frame) {
    PauliWord r(target_.n);
    for (const auto& g : p.frame.isotropic)
      if (rng.bit()) r ^= g.word;
    for (const auto& pr : p.frame.pairs) {
      std::uint64_t c = rng.below(4);
      if (c == 2) r ^= pr.g.word;
      if (c == 3) r ^= pr.h.word;
    }
    r ^= p.r0;
    return r;
  }

  // Dense: categorical draw from the exact psi x psi table.
  auto table = bell_distribution(p.dense, p.dense);
  double u = rng.uniform();
  double acc = 0.0;
  for (const auto& [w, pr] : table) {
    acc += pr;
    if (u <= acc) return w;
  }
  return table.rbegin()->first;
}

int OracleSession::pauli_measure(StateCopy& a, const SignedPauli& p, Rng& rng) {
  if (a.consumed) throw Error("pauli_measure: consumed handle");
  if (!p.hermitian()) throw Error("pauli_measure: non-Hermitian operator");
  a.consumed = true;
  auto ck = std::make_tuple(a.prep_key, p.word.flat(), int{p.phase});
  auto hit = pr_cache_.find(ck);
  double pr_plus;
  if (hit != pr_cache_.end()) {
    pr_plus = hit->second;
  } else {
    const Prep& pr = cache_.at(a.prep_key);
    double e = backend_ == Backend::Frame ? pseudo_expectation(pr.frame, p)
                                          : pauli_expectation(pr.dense, p);
    pr_plus = 0.5 * (1.0 + e);
    pr_cache_.emplace(ck, pr_plus);
  }
  return rng.uniform() < pr_plus ? +1 : -1;
}

std::map<PauliWord, double> OracleSession::exact_bell_distribution(
    const BitVec& input, bool xbasis, bool conj) {
  const Prep& p = prep_for(input, xbasis);
  const ExpandedFrame& e = p.frame;
  std::size_t ni = e.isotropic.size(), k = e.pairs.size();
  if (ni > 22) throw GuardExceeded("exact_bell_distribution: too many qubits");
  double base = 1.0 / static_cast<double>(std::size_t{1} << target_.n);
  std::map<PauliWord, double> table;
  std::size_t pair_total = 1;
  for (std::size_t i = 0; i < k; ++i) pair_total *= 3;
  for (std::size_t sub = 0; sub < (std::size_t{1} << ni); ++sub) {
    PauliWord iso_word(target_.n);
    for (std::size_t i = 0; i < ni; ++i)
      if (sub >> i & 1) iso_word ^= e.isotropic[i].word;
    for (std::size_t pc = 0; pc < pair_total; ++pc) {
      PauliWord w = iso_word;
      std::size_t digits = pc, m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t d = digits % 3;
        digits /= 3;
        if (d == 1) w ^= e.pairs[i].g.word, ++m;
        if (d == 2) w ^= e.pairs[i].h.word, ++m;
      }
      if (!conj) w ^= p.r0;
      table[w] += base * std::pow(0.5, static_cast<double>(m));
    }
  }
  return table;
}

double OracleSession::exact_pr_plus(const BitVec& input, const SignedPauli& p,
                                    bool xbasis) {
  const Prep& pr = prep_for(input, xbasis);
  return 0.5 * (1.0 + pseudo_expectation(pr.frame, p));
}

}  // namespace stablearn
