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

#include "stablearn/gf2.hpp"

#include <list>

#include "stablearn/errors.hpp"

namespace stablearn {

RrefResult gf2_rref(const BitMatrix& m) {
  RrefResult r;
  r.m = m;
  std::size_t nr = r.m.rows.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < nr; ++col) {
    std::size_t pivot = nr;
    for (std::size_t i = row; i < nr; ++i) {
      if (r.m.rows[i].get(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == nr) continue;
    std::swap(r.m.rows[row], r.m.rows[pivot]);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i != row && r.m.rows[i].get(col)) r.m.rows[i] ^= r.m.rows[row];
    }
    r.pivots.push_back(col);
    ++row;
  }
  r.rank = row;
  return r;
}

std::size_t gf2_rank(const BitMatrix& m) { return gf2_rref(m).rank; }

BitMatrix gf2_invert(const BitMatrix& m) {
  std::size_t n = m.rows.size();
  if (n != m.cols) throw Error("gf2_invert: not square");
  // Augment with the identity and reduce.
  BitMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.get(i, j));
    aug.set(i, n + i, true);
  }
  RrefResult r = gf2_rref(aug);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= r.pivots.size() || r.pivots[i] != i)
      throw Error("gf2_invert: singular matrix");
  }
  BitMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.m.get(i, n + j));
  return inv;
}

BitMatrix gf2_multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols != b.rows.size()) throw Error("gf2_multiply: shape mismatch");
  BitMatrix c(a.rows.size(), b.cols);
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (a.get(i, k)) c.rows[i] ^= b.rows[k];
  return c;
}

std::optional<BitVec> gf2_solve(const BitMatrix& a, const BitVec& b) {
  std::size_t nr = a.rows.size();
  BitMatrix aug(nr, a.cols + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.set(i, j, a.get(i, j));
    aug.set(i, a.cols, b.get(i));
  }
  RrefResult r = gf2_rref(aug);
  BitVec x(a.cols);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == a.cols) return std::nullopt;  // 0 = 1 row
    x.set(r.pivots[i], r.m.rows[i].get(a.cols));
  }
  return x;
}

std::optional<BitVec> gf2_express(const std::vector<BitVec>& rows,
                                  const BitVec& t) {
  if (rows.empty()) return t.any() ? std::nullopt : std::optional(BitVec(0));
  std::size_t w = rows[0].size();
  // Unknowns are the coefficients; equation j is bit j of the combination.
  BitMatrix a(w, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (rows[i].get(j)) a.set(j, i, true);
  BitVec b(w);
  for (std::size_t j = 0; j < w; ++j) b.set(j, t.get(j));
  return gf2_solve(a, b);
}

SymplecticSplit symplectic_gram_schmidt(const std::vector<PauliWord>& gens) {
  if (!gens.empty()) {
    BitMatrix m(gens.size(), 2 * gens[0].n);
    for (std::size_t i = 0; i < gens.size(); ++i) m.rows[i] = gens[i].flat();
    if (gf2_rank(m) != gens.size())
      throw Error("symplectic_gram_schmidt: dependent generators");
  }
  SymplecticSplit out;
  std::list<PauliWord> work(gens.begin(), gens.end());
  while (!work.empty()) {
    PauliWord a = work.front();
    work.pop_front();
    auto it = work.begin();
    for (; it != work.end(); ++it)
      if (symplectic_product(a, *it)) break;
    if (it == work.end()) {
      out.isotropic.push_back(a);
      continue;
    }
    PauliWord b = *it;
    work.erase(it);
    for (auto& e : work) {
      if (symplectic_product(e, a)) e ^= b;
      if (symplectic_product(e, b)) e ^= a;
    }
    out.pairs.emplace_back(a, b);
  }
  return out;
}

}  // namespace stablearn
