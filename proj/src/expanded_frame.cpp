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

#include "stablearn/expanded_frame.hpp"

#include <cmath>

#include "stablearn/errors.hpp"
#include "stablearn/gf2.hpp"

namespace stablearn {

double PseudomixtureWeights::alpha2() { return (1.0 - std::sqrt(2.0)) / 2.0; }
double PseudomixtureWeights::alpha3() { return std::sqrt(2.0) / 2.0; }

ExpandedFrame ExpandedFrame::from_frame(const PauliFrame& f) {
  ExpandedFrame e;
  e.n = f.n;
  e.isotropic = f.rows;
  return e;
}

PauliFrame ExpandedFrame::to_frame() const {
  if (!pairs.empty()) throw Error("to_frame: k_hat > 0");
  PauliFrame f(n);
  f.rows = isotropic;
  return f;
}

void ExpandedFrame::apply_circuit(const Circuit& c) {
  if (!c.is_clifford()) throw Error("apply_circuit: non-Clifford gate");
  for (const auto& g : c.gates) {
    for (auto& r : isotropic) conjugate_by_gate(r, g);
    for (auto& p : pairs) {
      conjugate_by_gate(p.g, g);
      conjugate_by_gate(p.h, g);
    }
  }
}

void ExpandedFrame::check_invariants() const {
  if (isotropic.size() + pairs.size() != n)
    throw Error("expanded frame: wrong generator count");
  std::vector<SignedPauli> all = isotropic;
  for (const auto& p : pairs) {
    all.push_back(p.g);
    all.push_back(p.h);
  }
  BitMatrix m(all.size(), 2 * n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].hermitian()) throw Error("expanded frame: non-Hermitian element");
    m.rows[i] = all[i].word.flat();
  }
  if (gf2_rank(m) != n + pairs.size())
    throw Error("expanded frame: dependent words");
  std::size_t ni = isotropic.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool anti = symplectic_product(all[i].word, all[j].word) != 0;
      // Only the two members of one pair may anticommute.
      bool expect_anti = i >= ni && j == i + 1 && ((i - ni) % 2 == 0);
      if (anti != expect_anti)
        throw Error("expanded frame: commutation contract violated");
    }
  }
}

ExpandedFrame expand_t_gate(ExpandedFrame e, std::size_t qubit) {
  std::size_t n = e.n;
  if (qubit >= n) throw Error("expand_t_gate: qubit out of range");

  std::vector<std::size_t> iso_carriers;
  for (std::size_t i = 0; i < e.isotropic.size(); ++i)
    if (e.isotropic[i].word.x.get(qubit)) iso_carriers.push_back(i);
  std::vector<std::size_t> pair_carriers;
  for (std::size_t i = 0; i < e.pairs.size(); ++i)
    if (e.pairs[i].g.word.x.get(qubit)) pair_carriers.push_back(i);

  if (iso_carriers.empty() && pair_carriers.empty()) return e;  // phase only

  if (!iso_carriers.empty()) {
    std::size_t c = iso_carriers[0];
    const SignedPauli row = e.isotropic[c];
    for (std::size_t i = 1; i < iso_carriers.size(); ++i)
      e.isotropic[iso_carriers[i]] =
          multiply(e.isotropic[iso_carriers[i]], row);
    for (std::size_t pi : pair_carriers) {
      e.pairs[pi].g = multiply(e.pairs[pi].g, row);
      e.pairs[pi].h = multiply(e.pairs[pi].h, row);
    }
    e.isotropic.erase(e.isotropic.begin() + static_cast<std::ptrdiff_t>(c));
    PrimaryPair pp;
    pp.g = row;
    pp.h = multiply(row, pauli_z(n, qubit));
    pp.h.phase = static_cast<std::uint8_t>((pp.h.phase + 1) & 3);  // i g Z_q
    pp.origin_q = qubit;
    e.pairs.push_back(pp);
    return e;
  }

  // Only pair members carry x_qubit: the new T shares a virtual wire with an
  // existing pair iff +/- Z_qubit Z_origin lies in the signed isotropic group.
  std::vector<BitVec> iso_flats;
  for (const auto& r : e.isotropic) iso_flats.push_back(r.word.flat());
  for (std::size_t pi : pair_carriers) {
    std::size_t oq = e.pairs[pi].origin_q;
    SignedPauli zz = multiply(pauli_z(n, qubit), pauli_z(n, oq));
    auto combo = gf2_express(iso_flats, zz.word.flat());
    if (!combo) continue;
    SignedPauli prod = pauli_identity(n);
    for (std::size_t i = 0; i < e.isotropic.size(); ++i)
      if (combo->get(i)) prod = multiply(prod, e.isotropic[i]);
    bool same_bit = prod.phase == zz.phase;
    // T here times the T that made the pair: same bit -> S on the virtual
    // wire; complementary bit -> global phase only. Either way the pair
    // collapses back to a stabilizer row.
    SignedPauli g = e.pairs[pi].g;
    e.pairs.erase(e.pairs.begin() + static_cast<std::ptrdiff_t>(pi));
    e.isotropic.push_back(g);
    if (same_bit) {
      Gate s(GateKind::S, oq);
      for (auto& r : e.isotropic) conjugate_by_gate(r, s);
      for (auto& p : e.pairs) {
        conjugate_by_gate(p.g, s);
        conjugate_by_gate(p.h, s);
      }
    }
    return e;
  }

  throw NotRepresentable(
      "expand_t_gate: T-stage X-dependence spread across pairs has no "
      "isotropic+pairs form");
}

ExpandedFrame build_tdepth1(const Circuit& c1, const BitVec& v,
                            const Circuit& c2, const BitVec& input) {
  if (!c1.is_clifford() || !c2.is_clifford())
    throw Error("build_tdepth1: c1/c2 must be Clifford");
  PauliFrame f = frame_of_basis_state(input);
  f.apply_circuit(c1);
  ExpandedFrame e = ExpandedFrame::from_frame(f);
  for (std::size_t q = 0; q < v.size(); ++q)
    if (v.get(q)) e = expand_t_gate(std::move(e), q);
  e.apply_circuit(c2);
  return e;
}

std::vector<std::pair<double, PauliFrame>> component_states(
    const ExpandedFrame& e) {
  std::size_t k = e.k_hat();
  if (k > kComponentGuardKhat)
    throw GuardExceeded("component_states: k_hat guard exceeded");
  double alpha[3] = {PseudomixtureWeights::alpha1(),
                     PseudomixtureWeights::alpha2(),
                     PseudomixtureWeights::alpha3()};
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  std::vector<std::pair<double, PauliFrame>> out;
  out.reserve(total);
  for (std::size_t j = 0; j < total; ++j) {
    double beta = 1.0;
    PauliFrame f(e.n);
    f.rows = e.isotropic;
    std::size_t digits = j;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t d = digits % 3;  // 0 -> g, 1 -> -g, 2 -> h
      digits /= 3;
      beta *= alpha[d];
      SignedPauli m = d == 2 ? e.pairs[i].h : e.pairs[i].g;
      if (d == 1) m.negate();
      f.rows.push_back(m);
    }
    out.emplace_back(beta, std::move(f));
  }
  return out;
}

double pseudo_expectation(const ExpandedFrame& e, const SignedPauli& p) {
  if (!p.hermitian()) throw Error("pseudo_expectation: non-Hermitian p");
  std::vector<BitVec> flats;
  for (const auto& r : e.isotropic) flats.push_back(r.word.flat());
  for (const auto& pr : e.pairs) {
    flats.push_back(pr.g.word.flat());
    flats.push_back(pr.h.word.flat());
  }
  auto combo = gf2_express(flats, p.word.flat());
  if (!combo) return 0.0;
  std::size_t ni = e.isotropic.size();
  std::size_t m = 0;
  for (std::size_t i = 0; i < e.pairs.size(); ++i) {
    bool bg = combo->get(ni + 2 * i), bh = combo->get(ni + 2 * i + 1);
    if (bg && bh) return 0.0;  // g h anticommutes with every branch choice
    if (bg || bh) ++m;
  }
  SignedPauli prod = pauli_identity(e.n);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (!combo->get(i)) continue;
    const SignedPauli& el =
        i < ni ? e.isotropic[i]
               : ((i - ni) % 2 ? e.pairs[(i - ni) / 2].h
                               : e.pairs[(i - ni) / 2].g);
    prod = multiply(prod, el);
  }
  double tau = prod.phase == p.phase ? 1.0 : -1.0;
  return tau * std::pow(2.0, -0.5 * static_cast<double>(m));
}

PauliWord bell_shift(const ExpandedFrame& in) {
  ExpandedFrame e = in;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < e.isotropic.size(); ++i)
    if (conjugate_negates(e.isotropic[i])) neg.push_back(i);

  if (!neg.empty()) {
    const SignedPauli base = e.isotropic[neg[0]];
    for (std::size_t i = 1; i < neg.size(); ++i)
      e.isotropic[neg[i]] = multiply(e.isotropic[neg[i]], base);
    for (auto& p : e.pairs) {
      if (conjugate_negates(p.g)) p.g = multiply(p.g, base);
      if (conjugate_negates(p.h)) p.h = multiply(p.h, base);
    }
    // r0 = any symplectic partner of the remaining negated generator.
    std::vector<SignedPauli> all = e.isotropic;
    for (const auto& p : e.pairs) {
      all.push_back(p.g);
      all.push_back(p.h);
    }
    BitMatrix a(all.size(), 2 * e.n);
    BitVec b(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      // symp(all_i, r) with r = [z | x]: row is [x_i | z_i].
      for (std::size_t q = 0; q < e.n; ++q) {
        if (all[i].word.x.get(q)) a.set(i, q, true);
        if (all[i].word.z.get(q)) a.set(i, e.n + q, true);
      }
      b.set(i, i == neg[0]);
    }
    auto r = gf2_solve(a, b);
    if (!r) throw Error("bell_shift: no symplectic partner found");
    return PauliWord::from_flat(*r, e.n);
  }

  PauliWord r0(e.n);
  for (const auto& p : e.pairs) {
    if (conjugate_negates(p.g)) r0 ^= p.h.word;
    if (conjugate_negates(p.h)) r0 ^= p.g.word;
  }
  return r0;
}

}  // namespace stablearn
