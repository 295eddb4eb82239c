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

#include "stablearn/frame.hpp"

#include "stablearn/errors.hpp"
#include "stablearn/gf2.hpp"

namespace stablearn {

namespace {

void conj_h(SignedPauli& p, std::size_t q) {
  bool z = p.word.z.get(q), x = p.word.x.get(q);
  if (z && x) p.negate();
  p.word.z.set(q, x);
  p.word.x.set(q, z);
}

void conj_s(SignedPauli& p, std::size_t q) {
  bool z = p.word.z.get(q), x = p.word.x.get(q);
  if (z && x) p.negate();
  if (x) p.word.z.flip(q);
}

void conj_sdg(SignedPauli& p, std::size_t q) {
  bool z = p.word.z.get(q), x = p.word.x.get(q);
  if (x && !z) p.negate();
  if (x) p.word.z.flip(q);
}

void conj_cx(SignedPauli& p, std::size_t c, std::size_t t) {
  bool xc = p.word.x.get(c), zc = p.word.z.get(c);
  bool xt = p.word.x.get(t), zt = p.word.z.get(t);
  if (xc && zt && !(xt ^ zc)) p.negate();
  p.word.x.set(t, xt ^ xc);
  p.word.z.set(c, zc ^ zt);
}

}  // namespace

void conjugate_by_gate(SignedPauli& p, const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      conj_h(p, g.q0);
      return;
    case GateKind::S:
      conj_s(p, g.q0);
      return;
    case GateKind::Sdg:
      conj_sdg(p, g.q0);
      return;
    case GateKind::X:
      if (p.word.z.get(g.q0)) p.negate();
      return;
    case GateKind::Y:
      if (p.word.z.get(g.q0) ^ p.word.x.get(g.q0)) p.negate();
      return;
    case GateKind::Z:
      if (p.word.x.get(g.q0)) p.negate();
      return;
    case GateKind::CX:
      conj_cx(p, g.q0, g.q1);
      return;
    case GateKind::CZ:
      conj_h(p, g.q1);
      conj_cx(p, g.q0, g.q1);
      conj_h(p, g.q1);
      return;
    case GateKind::SWAP:
      conj_cx(p, g.q0, g.q1);
      conj_cx(p, g.q1, g.q0);
      conj_cx(p, g.q0, g.q1);
      return;
    case GateKind::T:
      throw Error("conjugate_by_gate: T is not Clifford");
  }
}

void PauliFrame::apply_gate(const Gate& g) {
  for (auto& r : rows) conjugate_by_gate(r, g);
}

void PauliFrame::apply_circuit(const Circuit& c) {
  for (const auto& g : c.gates) apply_gate(g);
}

int PauliFrame::group_expectation(const SignedPauli& p) const {
  std::vector<BitVec> flats;
  flats.reserve(rows.size());
  for (const auto& r : rows) flats.push_back(r.word.flat());
  auto combo = gf2_express(flats, p.word.flat());
  if (!combo) return 0;
  SignedPauli prod = pauli_identity(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (combo->get(i)) prod = multiply(prod, rows[i]);
  return prod.phase == p.phase ? +1 : -1;
}

int PauliFrame::measure_pauli(const SignedPauli& p, Rng& rng) {
  std::size_t anti = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (symplectic_product(rows[i].word, p.word)) {
      anti = i;
      break;
    }
  }
  if (anti == rows.size()) {
    int e = group_expectation(p);
    if (e == 0) throw Error("measure_pauli: commuting Pauli outside group");
    return e;
  }
  int outcome = rng.bit() ? +1 : -1;
  for (std::size_t i = anti + 1; i < rows.size(); ++i)
    if (symplectic_product(rows[i].word, p.word))
      rows[i] = multiply(rows[i], rows[anti]);
  rows[anti] = p;
  if (outcome < 0) rows[anti].negate();
  return outcome;
}

std::size_t PauliFrame::x_rank() const {
  BitMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i].word.x.get(j)) m.set(i, j, true);
  return gf2_rank(m);
}

void PauliFrame::check_invariants() const {
  if (rows.size() != n) throw Error("frame: wrong row count");
  BitMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].hermitian()) throw Error("frame: non-Hermitian row");
    m.rows[i] = rows[i].word.flat();
    for (std::size_t j = i + 1; j < n; ++j)
      if (symplectic_product(rows[i].word, rows[j].word))
        throw Error("frame: rows do not commute");
  }
  if (gf2_rank(m) != n) throw Error("frame: dependent rows");
  // Independence plus per-row sign consistency excludes -I automatically;
  // nothing further to check.
}

PauliFrame frame_of_basis_state(const BitVec& v) {
  PauliFrame f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    SignedPauli p = pauli_z(v.size(), i);
    if (v.get(i)) p.negate();
    f.rows.push_back(p);
  }
  return f;
}

PauliFrame frame_of_plus_state(const BitVec& v) {
  PauliFrame f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    SignedPauli p = pauli_x(v.size(), i);
    if (v.get(i)) p.negate();
    f.rows.push_back(p);
  }
  return f;
}

PauliFrame canonical_form(const PauliFrame& f) {
  PauliFrame g = f;
  std::size_t nr = g.rows.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < 2 * g.n && row < nr; ++col) {
    auto bit = [&](const SignedPauli& p, std::size_t c) {
      return c < g.n ? p.word.z.get(c) : p.word.x.get(c - g.n);
    };
    std::size_t pivot = nr;
    for (std::size_t i = row; i < nr; ++i) {
      if (bit(g.rows[i], col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == nr) continue;
    std::swap(g.rows[row], g.rows[pivot]);
    for (std::size_t i = 0; i < nr; ++i)
      if (i != row && bit(g.rows[i], col))
        g.rows[i] = multiply(g.rows[i], g.rows[row]);
    ++row;
  }
  return g;
}

}  // namespace stablearn
