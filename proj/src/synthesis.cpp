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

#include "stablearn/synthesis.hpp"

#include <algorithm>

#include "stablearn/errors.hpp"
#include "stablearn/frame.hpp"
#include "stablearn/gf2.hpp"

namespace stablearn {

void PartialTableau::check(bool full) const {
  if (x_images.size() != n || z_images.size() > n)
    throw Error("tableau: wrong row counts");
  if (full && z_images.size() != n) throw Error("tableau: not full");
  for (std::size_t i = 0; i < x_images.size(); ++i) {
    if (!x_images[i].hermitian()) throw Error("tableau: non-Hermitian row");
    for (std::size_t j = 0; j < x_images.size(); ++j)
      if (i < j && symplectic_product(x_images[i].word, x_images[j].word))
        throw Error("tableau: x-images must commute");
    for (std::size_t j = 0; j < z_images.size(); ++j) {
      bool want = i == j;
      if ((symplectic_product(x_images[i].word, z_images[j].word) != 0) != want)
        throw Error("tableau: x/z commutation relations violated");
    }
  }
  for (std::size_t i = 0; i < z_images.size(); ++i) {
    if (!z_images[i].hermitian()) throw Error("tableau: non-Hermitian row");
    for (std::size_t j = i + 1; j < z_images.size(); ++j)
      if (symplectic_product(z_images[i].word, z_images[j].word))
        throw Error("tableau: z-images must commute");
  }
}

Tableau tableau_of(const Circuit& c) {
  if (!c.is_clifford()) throw Error("tableau_of: T gate present");
  Tableau t;
  t.n = c.n;
  for (std::size_t i = 0; i < c.n; ++i) t.x_images.push_back(pauli_x(c.n, i));
  for (std::size_t i = 0; i < c.n; ++i) t.z_images.push_back(pauli_z(c.n, i));
  for (const auto& g : c.gates) {
    for (auto& p : t.x_images) conjugate_by_gate(p, g);
    for (auto& p : t.z_images) conjugate_by_gate(p, g);
  }
  return t;
}

Tableau complete_tableau_masked(
    std::size_t n, const std::vector<SignedPauli>& x_images,
    const std::vector<std::optional<SignedPauli>>& z_images) {
  Tableau t;
  t.n = n;
  t.x_images = x_images;
  std::vector<std::optional<SignedPauli>> z = z_images;
  z.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (z[j]) continue;
    // Solve for a word anticommuting with x_j only, commuting with all other
    // fixed rows; unknown r = [z-bits | x-bits].
    std::vector<const SignedPauli*> cons;
    std::vector<bool> rhs;
    for (std::size_t i = 0; i < n; ++i) {
      cons.push_back(&t.x_images[i]);
      rhs.push_back(i == j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (z[i]) {
        cons.push_back(&*z[i]);
        rhs.push_back(false);
      }
    }
    BitMatrix a(cons.size(), 2 * n);
    BitVec b(cons.size());
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t q = 0; q < n; ++q) {
        if (cons[i]->word.x.get(q)) a.set(i, q, true);
        if (cons[i]->word.z.get(q)) a.set(i, n + q, true);
      }
      b.set(i, rhs[i]);
    }
    auto r = gf2_solve(a, b);
    if (!r) throw InconsistentTarget("complete_tableau: no symplectic partner");
    z[j] = SignedPauli(PauliWord::from_flat(*r, n), 0);
  }
  for (auto& e : z) t.z_images.push_back(*e);
  t.check(true);
  return t;
}

Tableau complete_tableau(const PartialTableau& p) {
  p.check(false);
  std::vector<std::optional<SignedPauli>> z;
  for (const auto& e : p.z_images) z.emplace_back(e);
  return complete_tableau_masked(p.n, p.x_images, z);
}

namespace {

/// Working sweep state: gate conjugations applied to every row, gates
/// recorded for later inversion.
struct Sweep {
  Tableau w;
  std::vector<Gate> ops;

  void apply(const Gate& g) {
    for (auto& p : w.x_images) conjugate_by_gate(p, g);
    for (auto& p : w.z_images) conjugate_by_gate(p, g);
    ops.push_back(g);
  }

  void apply_cz(std::size_t a, std::size_t b) {
    apply(Gate(GateKind::H, b));
    apply(Gate(GateKind::CX, a, b));
    apply(Gate(GateKind::H, b));
  }
};

}  // namespace

Circuit synthesize(const Tableau& t) {
  t.check(true);
  std::size_t n = t.n;
  Sweep s;
  s.w = t;

  for (std::size_t i = 0; i < n; ++i) {
    // Reduce x-image i to +/- X_i.
    {
      SignedPauli& x = s.w.x_images[i];
      bool have_x = false;
      for (std::size_t j = i; j < n && !have_x; ++j) have_x = x.word.x.get(j);
      if (!have_x) {
        for (std::size_t j = i; j < n; ++j) {
          if (x.word.z.get(j)) {
            s.apply(Gate(GateKind::H, j));
            break;
          }
        }
      }
    }
    if (!s.w.x_images[i].word.x.get(i)) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s.w.x_images[i].word.x.get(j)) {
          s.apply(Gate(GateKind::CX, j, i));
          break;
        }
      }
    }
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.w.x_images[i].word.x.get(j)) s.apply(Gate(GateKind::CX, i, j));
    if (s.w.x_images[i].word.z.get(i)) s.apply(Gate(GateKind::Sdg, i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.w.x_images[i].word.z.get(j)) s.apply_cz(i, j);

    // Reduce z-image i to +/- Z_i; it already avoids finished wires.
    {
      std::size_t xa = n;
      for (std::size_t j = i + 1; j < n; ++j)
        if (s.w.z_images[i].word.x.get(j)) {
          xa = j;
          break;
        }
      if (xa < n) {
        for (std::size_t j = xa + 1; j < n; ++j)
          if (s.w.z_images[i].word.x.get(j)) s.apply(Gate(GateKind::CX, xa, j));
        if (s.w.z_images[i].word.z.get(xa)) s.apply(Gate(GateKind::Sdg, xa));
        s.apply(Gate(GateKind::H, xa));
      }
    }
    if (s.w.z_images[i].word.x.get(i)) {
      // Local pair (X, Y): H S H fixes X and turns Y into Z.
      s.apply(Gate(GateKind::H, i));
      s.apply(Gate(GateKind::S, i));
      s.apply(Gate(GateKind::H, i));
    }
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.w.z_images[i].word.z.get(j)) s.apply(Gate(GateKind::CX, j, i));
  }

  // Signs: trailing Pauli layer, then the inverted sweep.
  Circuit c(n);
  for (std::size_t i = 0; i < n; ++i) {
    SignedPauli& x = s.w.x_images[i];
    SignedPauli& z = s.w.z_images[i];
    if (!(x.word == pauli_x(n, i).word) || !(z.word == pauli_z(n, i).word))
      throw Error("synthesize: sweep failed");
    if (x.sign() < 0) c.gates.emplace_back(GateKind::Z, i);
    if (z.sign() < 0) c.gates.emplace_back(GateKind::X, i);
  }
  for (auto it = s.ops.rbegin(); it != s.ops.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::S)
      g.kind = GateKind::Sdg;
    else if (g.kind == GateKind::Sdg)
      g.kind = GateKind::S;
    c.gates.push_back(g);
  }
  return c;
}

Circuit assemble_tdepth1(const Circuit& c, const std::vector<int>& s,
                         std::size_t k) {
  std::size_t n = c.n;
  if (s.size() != n) throw Error("assemble_tdepth1: bad s length");
  for (std::size_t i = 0; i + k < n; ++i)
    if (s[i] != 0) throw Error("assemble_tdepth1: s_i must vanish off the T wires");
  Circuit out(n);
  for (std::size_t i = 0; i < n; ++i) out.gates.emplace_back(GateKind::H, i);
  for (std::size_t i = 0; i < n; ++i) {
    switch (s[i] & 3) {
      case 0:
        break;
      case 1:
        out.gates.emplace_back(GateKind::S, i);
        break;
      case 2:
        out.gates.emplace_back(GateKind::Z, i);
        break;
      case 3:
        out.gates.emplace_back(GateKind::Sdg, i);
        break;
    }
  }
  for (std::size_t i = n - k; i < n; ++i) out.gates.emplace_back(GateKind::T, i);
  out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
  return out;
}

Circuit invert_clifford(const Circuit& c) {
  if (!c.is_clifford()) throw Error("invert_clifford: T gate present");
  Circuit inv(c.n);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::S)
      g.kind = GateKind::Sdg;
    else if (g.kind == GateKind::Sdg)
      g.kind = GateKind::S;
    inv.gates.push_back(g);
  }
  return inv;
}

bool tableau_equal(const Tableau& a, const Tableau& b) {
  return a.n == b.n && a.x_images == b.x_images && a.z_images == b.z_images;
}

}  // namespace stablearn
