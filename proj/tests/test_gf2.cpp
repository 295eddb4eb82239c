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

#include <doctest.h>

#include "stablearn/errors.hpp"
#include "stablearn/gf2.hpp"
#include "stablearn/rng.hpp"

using namespace stablearn;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.bit());
  return m;
}

}  // namespace

TEST_CASE("rref of a known matrix") {
  BitMatrix m(3, 3);
  // rows: 110, 011, 101 (rank 2; the three rows sum to zero)
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);
  RrefResult r = gf2_rref(m);
  CHECK(r.rank == 2);
  REQUIRE(r.pivots.size() == 2);
  CHECK(r.pivots[0] == 0);
  CHECK(r.pivots[1] == 1);
  CHECK(gf2_rank(m) == 2);
}

TEST_CASE("invert round trip on random full-rank matrices") {
  Rng rng(11);
  int tried = 0;
  for (std::size_t t = 0; t < 200 && tried < 40; ++t) {
    std::size_t n = 1 + rng.below(8);
    BitMatrix m = random_matrix(n, n, rng);
    if (gf2_rank(m) != n) continue;
    ++tried;
    BitMatrix inv = gf2_invert(m);
    CHECK(gf2_multiply(m, inv) == BitMatrix::identity(n));
    CHECK(gf2_multiply(inv, m) == BitMatrix::identity(n));
  }
  CHECK(tried >= 20);
}

TEST_CASE("invert rejects singular input") {
  BitMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);
  CHECK_THROWS_AS(gf2_invert(m), Error);
}

TEST_CASE("solve finds a preimage and detects inconsistency") {
  Rng rng(5);
  for (std::size_t t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    BitMatrix a = random_matrix(r, c, rng);
    BitVec x(c);
    for (std::size_t j = 0; j < c; ++j) x.set(j, rng.bit());
    BitVec b(r);
    for (std::size_t i = 0; i < r; ++i) b.set(i, BitVec::dot(a.rows[i], x));
    auto sol = gf2_solve(a, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < r; ++i)
      CHECK(BitVec::dot(a.rows[i], *sol) == b.get(i));
  }
  BitMatrix a(2, 1);
  a.set(0, 0, true);
  BitVec b(2);
  b.set(1, true);  // 0 * x = 1 in row 1
  CHECK(!gf2_solve(a, b).has_value());
}

TEST_CASE("express recovers combination coefficients") {
  Rng rng(7);
  std::vector<BitVec> rows;
  for (int i = 0; i < 4; ++i) {
    BitVec v(6);
    for (std::size_t j = 0; j < 6; ++j) v.set(j, rng.bit());
    rows.push_back(v);
  }
  BitVec t(6);
  t ^= rows[0];
  t ^= rows[2];
  auto coef = gf2_express(rows, t);
  REQUIRE(coef.has_value());
  BitVec back(6);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (coef->get(i)) back ^= rows[i];
  CHECK(back == t);
}

TEST_CASE("symplectic Gram-Schmidt splits a commuting set as isotropic") {
  std::vector<PauliWord> gens = {parse_pauli("ZI").word, parse_pauli("IZ").word};
  SymplecticSplit s = symplectic_gram_schmidt(gens);
  CHECK(s.isotropic.size() == 2);
  CHECK(s.pairs.empty());
}

TEST_CASE("symplectic Gram-Schmidt pairing invariants") {
  std::vector<PauliWord> gens;
  for (const char* w : {"ZXI", "XZI", "IIZ", "ZZX"})
    gens.push_back(parse_pauli(w).word);
  SymplecticSplit s = symplectic_gram_schmidt(gens);
  CHECK(s.isotropic.size() + 2 * s.pairs.size() == gens.size());
  for (const auto& [g, h] : s.pairs) {
    CHECK(symplectic_product(g, h) == 1);
    for (const auto& iso : s.isotropic) {
      CHECK(symplectic_product(g, iso) == 0);
      CHECK(symplectic_product(h, iso) == 0);
    }
    for (const auto& [g2, h2] : s.pairs) {
      if (g2 == g) continue;
      CHECK(symplectic_product(g, g2) == 0);
      CHECK(symplectic_product(g, h2) == 0);
      CHECK(symplectic_product(h, g2) == 0);
      CHECK(symplectic_product(h, h2) == 0);
    }
  }
  for (std::size_t i = 0; i < s.isotropic.size(); ++i)
    for (std::size_t j = i + 1; j < s.isotropic.size(); ++j)
      CHECK(symplectic_product(s.isotropic[i], s.isotropic[j]) == 0);
}

TEST_CASE("symplectic Gram-Schmidt preserves the span") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 3 + rng.below(3);
    // Random independent words.
    std::vector<PauliWord> gens;
    std::vector<BitVec> flats;
    while (gens.size() < n) {
      PauliWord w(n);
      for (std::size_t j = 0; j < n; ++j) {
        w.z.set(j, rng.bit());
        w.x.set(j, rng.bit());
      }
      if (w.is_identity()) continue;
      std::vector<BitVec> trial = flats;
      trial.push_back(w.flat());
      BitMatrix m(trial.size(), 2 * n);
      m.rows = trial;
      if (gf2_rank(m) != trial.size()) continue;
      gens.push_back(w);
      flats.push_back(w.flat());
    }
    SymplecticSplit s = symplectic_gram_schmidt(gens);
    std::vector<BitVec> out;
    for (const auto& w : s.isotropic) out.push_back(w.flat());
    for (const auto& [g, h] : s.pairs) {
      out.push_back(g.flat());
      out.push_back(h.flat());
    }
    CHECK(out.size() == gens.size());
    for (const auto& f : out) CHECK(gf2_express(flats, f).has_value());
    for (const auto& f : flats) CHECK(gf2_express(out, f).has_value());
  }
}
