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

#include "stablearn/clifford_learner.hpp"

#include "stablearn/errors.hpp"
#include "stablearn/synthesis.hpp"

namespace stablearn {

std::vector<SignedPauli> learn_stabilizer_group(OracleSession& o,
                                                const BitVec& input,
                                                bool xbasis, Rng& rng,
                                                std::size_t max_words) {
  std::size_t n = o.n();
  if (max_words == 0) max_words = 2 * n;
  auto draw = [&] {
    StateCopy a = o.prepare(input, xbasis);
    StateCopy b = o.prepare(input, xbasis);
    return o.bell_measure(a, b, rng);
  };
  PauliWord reference = draw();
  // Draw group elements until they span; stop early so the saved copies can
  // fund longer harvests on unlucky runs elsewhere in the budget.
  BitMatrix m(0, 2 * n);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < max_words && rank < n; ++i) {
    PauliWord w = draw();
    w ^= reference;
    m.rows.push_back(w.flat());
    rank = gf2_rank(m);
  }
  if (rank < n) throw RankDeficient("stabilizer sampling rank deficient");
  RrefResult r = gf2_rref(m);

  std::vector<SignedPauli> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.emplace_back(PauliWord::from_flat(r.m.rows[i], n), 0);
  for (auto& g : gens) {
    StateCopy c = o.prepare(input, xbasis);
    if (o.pauli_measure(c, g, rng) < 0) g.negate();
  }
  return gens;
}

BitMatrix probe_signs(OracleSession& o, const std::vector<SignedPauli>& gens,
                      bool xbasis, Rng& rng) {
  std::size_t n = o.n();
  BitMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    BitVec ej(n);
    ej.set(j, true);
    for (std::size_t i = 0; i < n; ++i) {
      StateCopy c = o.prepare(ej, xbasis);
      b.set(i, j, o.pauli_measure(c, gens[i], rng) < 0);
    }
  }
  return b;
}

std::vector<SignedPauli> solve_images(const std::vector<SignedPauli>& gens,
                                      const BitMatrix& b) {
  std::size_t n = gens.size();
  BitMatrix d;
  try {
    d = gf2_invert(b);
  } catch (const Error&) {
    throw InconsistentTarget("probe matrix is singular");
  }
  std::vector<SignedPauli> images;
  for (std::size_t i = 0; i < n; ++i) {
    SignedPauli p = pauli_identity(gens[0].word.n);
    for (std::size_t j = 0; j < n; ++j)
      if (d.get(i, j)) p = multiply(p, gens[j]);
    images.push_back(p);
  }
  return images;
}

namespace {

std::vector<SignedPauli> run_pass(OracleSession& o, bool xbasis, Rng& rng,
                                  std::size_t& attempts,
                                  std::size_t max_words) {
  BitVec zero(o.n());
  ++attempts;
  auto gens = learn_stabilizer_group(o, zero, xbasis, rng, max_words);
  auto b = probe_signs(o, gens, xbasis, rng);
  return solve_images(gens, b);
}

}  // namespace

Circuit learn_clifford(OracleSession& o, Rng& rng, CliffordLearnStats* stats) {
  std::size_t n = o.n();
  CliffordLearnStats local;
  CliffordLearnStats& st = stats ? *stats : local;

  // Both passes share the overall budget: each pass may harvest as many Bell
  // words as the remaining allowance permits after reserving the fixed costs
  // (sign fixes n, basis probes n^2 per pass; one reference Bell measurement
  // and at least n words for the second harvest).
  const std::uint64_t total = clifford_budget(n);
  const std::uint64_t fixed = n + n * n;
  std::uint64_t reserve_x = 2 * (n + 1) + fixed;
  std::uint64_t avail_z = total - o.ledger().copies_prepared - fixed - reserve_x;
  auto z_images = run_pass(o, false, rng, st.z_attempts, (avail_z - 2) / 2);
  std::uint64_t avail_x = total - o.ledger().copies_prepared - fixed;
  auto x_images = run_pass(o, true, rng, st.x_attempts, (avail_x - 2) / 2);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool want = i == j;
      if ((symplectic_product(x_images[i].word, z_images[j].word) != 0) != want)
        throw InconsistentTarget("learned images violate commutation");
    }
  }

  Tableau t;
  t.n = n;
  t.x_images = x_images;
  t.z_images = z_images;
  Circuit c = synthesize(t);
  st.copies = o.ledger().copies_prepared;
  return c;
}

}  // namespace stablearn
