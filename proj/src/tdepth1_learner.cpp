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

#include "stablearn/tdepth1_learner.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "stablearn/dense.hpp"
#include "stablearn/errors.hpp"
#include "stablearn/frame.hpp"
#include "stablearn/synthesis.hpp"

namespace stablearn {

std::vector<PauliWord> harvest_bell(OracleSession& o, std::size_t count,
                                    Rng& rng) {
  BitVec zero(o.n());
  std::vector<PauliWord> out;
  PauliWord ref;
  for (std::size_t i = 0; i < count; ++i) {
    StateCopy a = o.prepare(zero);
    StateCopy b = o.prepare(zero);
    PauliWord r = o.bell_measure(a, b, rng);
    if (i == 0) {
      ref = r;
    } else {
      r ^= ref;
      out.push_back(r);
    }
  }
  return out;
}

SymplecticSplit split_generators(const std::vector<PauliWord>& words,
                                 std::size_t n) {
  BitMatrix m(words.size(), 2 * n);
  for (std::size_t i = 0; i < words.size(); ++i) m.rows[i] = words[i].flat();
  RrefResult r = gf2_rref(m);
  if (r.rank < n) throw RankDeficient("bell harvest rank deficient");
  std::size_t k = r.rank - n;
  std::vector<PauliWord> basis;
  for (std::size_t i = 0; i < r.rank; ++i)
    basis.push_back(PauliWord::from_flat(r.m.rows[i], n));
  SymplecticSplit s = symplectic_gram_schmidt(basis);
  if (s.pairs.size() != k || s.isotropic.size() != n - k)
    throw SearchFailed("harvested span is not an isotropic + pairs split");
  return s;
}

OperatorClassification classify_operator(OracleSession& o,
                                         const SignedPauli& p,
                                         std::size_t shots, Rng& rng) {
  BitVec zero(o.n());
  std::size_t plus = 0;
  for (std::size_t i = 0; i < shots; ++i) {
    StateCopy c = o.prepare(zero);
    if (o.pauli_measure(c, p, rng) > 0) ++plus;
  }
  OperatorClassification r;
  r.shots = shots;
  r.empirical_mean = static_cast<double>(plus) / static_cast<double>(shots);
  const double delta = (std::sqrt(2.0) - 1.0) / 4.0;
  const double half = delta / 2.0;
  double R = r.empirical_mean;
  if (R >= 1.0 - half) {
    r.label = OpLabel::IsotropicPlus;
  } else if (R <= half) {
    r.label = OpLabel::IsotropicMinus;
  } else if (std::abs(R - (2.0 + std::sqrt(2.0)) / 4.0) < half) {
    r.label = OpLabel::PrimaryPlus;
  } else if (std::abs(R - (2.0 - std::sqrt(2.0)) / 4.0) < half) {
    r.label = OpLabel::PrimaryMinus;
  } else if (std::abs(R - 0.5) < half) {
    r.label = OpLabel::NonMember;
  } else if (2.0 * R - 1.0 > 0.0) {
    r.label = OpLabel::ProductM;
    r.m = static_cast<std::size_t>(
        std::lround(-2.0 * std::log2(2.0 * R - 1.0)));
  } else {
    r.label = OpLabel::NonMember;
    r.ambiguous = true;
  }
  return r;
}

namespace {

bool in_word_span(const std::vector<BitVec>& rows, const PauliWord& w) {
  return gf2_express(rows, w.flat()).has_value();
}

}  // namespace

std::vector<std::pair<SignedPauli, SignedPauli>> find_primaries(
    OracleSession& o, const std::vector<std::pair<PauliWord, PauliWord>>& cand,
    const std::vector<PauliWord>& isotropic, Rng& rng,
    std::size_t* classifications) {
  std::size_t n = o.n(), k = cand.size();
  std::size_t cls = 0;
  std::vector<SignedPauli> found;
  std::vector<BitVec> span;
  for (const auto& w : isotropic) span.push_back(w.flat());

  auto consider = [&](const PauliWord& w) {
    if (found.size() >= 2 * k) return;
    if (w.is_identity() || in_word_span(span, w)) return;
    SignedPauli p(w, 0);
    ++cls;
    auto c = classify_operator(o, p, classify_shots(n), rng);
    if (c.label == OpLabel::PrimaryPlus || c.label == OpLabel::PrimaryMinus) {
      if (c.label == OpLabel::PrimaryMinus) p.negate();
      found.push_back(p);
      span.push_back(w.flat());
    }
  };

  // Main sweep: products over {I, a_i, b_i} per candidate pair, mixed-radix
  // order, early halt.
  std::size_t total3 = 1;
  for (std::size_t i = 0; i < k; ++i) total3 *= 3;
  for (std::size_t idx = 1; idx < total3 && found.size() < 2 * k; ++idx) {
    PauliWord w(n);
    std::size_t d = idx;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t c = d % 3;
      d /= 3;
      if (c == 1) w ^= cand[i].first;
      if (c == 2) w ^= cand[i].second;
    }
    consider(w);
  }

  // Completion sweep: the remaining products use a_i + b_i in at least one
  // slot; a true primary missed above must lie here. Filter by commutation
  // with the primaries already in hand.
  std::size_t total4 = 1;
  for (std::size_t i = 0; i < k; ++i) total4 *= 4;
  for (std::size_t idx = 1; idx < total4 && found.size() < 2 * k; ++idx) {
    std::size_t d = idx;
    bool has_both = false;
    PauliWord w(n);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t c = d % 4;
      d /= 4;
      if (c & 1) w ^= cand[i].first;
      if (c & 2) w ^= cand[i].second;
      if (c == 3) has_both = true;
    }
    if (!has_both) continue;
    std::size_t anti = 0;
    for (const auto& f : found) anti += symplectic_product(w, f.word);
    if (anti > 1) continue;
    consider(w);
  }

  if (classifications) *classifications += cls;
  if (found.size() < 2 * k)
    throw SearchFailed("fewer than 2k primary stabilizers found");

  // Re-pair by anticommutation: each primary anticommutes with exactly its
  // partner and commutes with the rest.
  std::vector<bool> used(found.size(), false);
  std::vector<std::pair<SignedPauli, SignedPauli>> pairs;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (used[i]) continue;
    std::size_t partner = found.size();
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      if (used[j] || !symplectic_product(found[i].word, found[j].word))
        continue;
      if (partner != found.size())
        throw SearchFailed("primary anticommutes with several partners");
      partner = j;
    }
    if (partner == found.size())
      throw SearchFailed("primary has no anticommuting partner");
    used[i] = used[partner] = true;
    pairs.emplace_back(found[i], found[partner]);
  }
  return pairs;
}

namespace {

SignedPauli conjugate_by_circuit(SignedPauli p, const Circuit& c) {
  for (const auto& g : c.gates) conjugate_by_gate(p, g);
  return p;
}

/// Measured sign of p on the output for basis input e_j, relative to its
/// sign on the 0^n output. Deterministic branch for isotropic generators,
/// majority vote for primaries (mean +/- 1/sqrt 2).
bool dep_bit(OracleSession& o, const SignedPauli& p, std::size_t j,
             bool deterministic, Rng& rng) {
  BitVec ej(o.n());
  ej.set(j, true);
  if (deterministic) {
    StateCopy c = o.prepare(ej);
    return o.pauli_measure(c, p, rng) < 0;
  }
  long sum = 0;
  for (std::size_t s = 0; s < kDepProbeShots; ++s) {
    StateCopy c = o.prepare(ej);
    sum += o.pauli_measure(c, p, rng);
  }
  return sum < 0;
}

Circuit attempt(OracleSession& o, Rng& rng, TDepth1LearnStats& st) {
  std::size_t n = o.n();
  BitVec zero(n);

  auto words = harvest_bell(o, 8 * n + 1, rng);
  SymplecticSplit split = split_generators(words, n);
  std::size_t k = split.pairs.size();
  st.k = k;

  // Signed isotropic generators (one deterministic measurement each).
  std::vector<SignedPauli> iso;
  for (const auto& w : split.isotropic) {
    SignedPauli g(w, 0);
    StateCopy c = o.prepare(zero);
    if (o.pauli_measure(c, g, rng) < 0) g.negate();
    iso.push_back(g);
  }

  auto primaries =
      find_primaries(o, split.pairs, split.isotropic, rng, &st.classifications);

  // Basis-dependence probes: dep(p) says which input bits flip the sign of
  // p on the target's output. Both pair members are probed; the partner is
  // re-multiplied by isotropic generators until its dependence matches its
  // mate's, so one pre-circuit row serves the whole pair.
  BitMatrix dmat(n, n);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dmat.set(i, j, dep_bit(o, iso[i], j, true, rng));
  for (std::size_t p = 0; p < k; ++p) {
    BitVec dg(n), dh(n);
    for (std::size_t j = 0; j < n; ++j) {
      dg.set(j, dep_bit(o, primaries[p].first, j, false, rng));
      dh.set(j, dep_bit(o, primaries[p].second, j, false, rng));
    }
    BitVec delta = dg;
    delta ^= dh;
    if (delta.any()) {
      BitMatrix sys(n, n - k);  // column i = dep row of isotropic gen i
      for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (dmat.get(i, j)) sys.set(j, i, true);
      auto sol = gf2_solve(sys, delta);
      if (!sol)
        throw InconsistentTarget("pair dependences differ outside iso span");
      for (std::size_t i = 0; i < n - k; ++i)
        if (sol->get(i))
          primaries[p].second = multiply(primaries[p].second, iso[i]);
    }
    for (std::size_t j = 0; j < n; ++j) dmat.set(n - k + p, j, dg.get(j));
  }

  // Synthesis inputs: unsigned pair representatives on the last k wires.
  std::vector<SignedPauli> x_images = iso;
  std::vector<std::optional<SignedPauli>> z_images(n - k, std::nullopt);
  for (const auto& [g, h] : primaries) {
    SignedPauli gu(g.word, 0);
    SignedPauli hu(h.word, 0);
    x_images.push_back(gu);
    SignedPauli zu = multiply(gu, hu);
    zu.phase = static_cast<std::uint8_t>((zu.phase + 3) & 3);  // times -i
    if (!zu.hermitian()) throw InconsistentTarget("pair product not a pair");
    z_images.emplace_back(zu);
  }
  Circuit c;
  try {
    Tableau t = complete_tableau_masked(n, x_images, z_images);
    c = synthesize(t);
  } catch (const GuardExceeded&) {
    throw;
  } catch (const Error&) {
    // A synthesis contract violation here means some classification was
    // wrong; retry with fresh samples.
    throw InconsistentTarget("learned generators do not synthesize");
  }
  Circuit cinv = invert_clifford(c);

  // Phase layer s from the signed pair images pulled back through C.
  std::vector<int> s(n, 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t w = n - k + j;
    SignedPauli gc = conjugate_by_circuit(primaries[j].first, cinv);
    SignedPauli hc = conjugate_by_circuit(primaries[j].second, cinv);
    if (!(gc.word == pauli_x(n, w).word) || !(hc.word == pauli_y(n, w).word))
      throw InconsistentTarget("pair does not pull back to its wire");
    bool sx = gc.sign() > 0, sy = hc.sign() > 0;
    if (sx && sy)
      s[w] = 0;
    else if (!sx && sy)
      s[w] = 1;
    else if (!sx && !sy)
      s[w] = 2;
    else
      s[w] = 3;
  }

  // Pre-circuit W with W|v> = |Dv>: wire i of the hypothesis then picks up
  // exactly the sign dependence recorded in row i of D.
  BitMatrix dinv;
  try {
    dinv = gf2_invert(dmat);
  } catch (const Error&) {
    throw InconsistentTarget("dependence matrix is singular");
  }
  // W|v> = |Dv>: X_j -> prod_i X_i^{D_ij}, Z_j -> prod_i Z_i^{(D^-T)_ij}.
  Tableau wt;
  wt.n = n;
  for (std::size_t j = 0; j < n; ++j) {
    SignedPauli xi(n);
    for (std::size_t i = 0; i < n; ++i)
      if (dmat.get(i, j)) xi.word.x.set(i, true);
    wt.x_images.push_back(xi);
  }
  for (std::size_t j = 0; j < n; ++j) {
    SignedPauli zi(n);
    for (std::size_t i = 0; i < n; ++i)
      if (dinv.get(j, i)) zi.word.z.set(i, true);
    wt.z_images.push_back(zi);
  }
  Circuit wc = synthesize(wt);

  Circuit out = assemble_tdepth1(c, s, k);
  Circuit full(n);
  full.gates = wc.gates;
  full.gates.insert(full.gates.end(), out.gates.begin(), out.gates.end());
  return full;
}

}  // namespace

Circuit phase_align(OracleSession& o, const Circuit& hyp) {
  using cplx = std::complex<double>;
  std::size_t n = o.n();
  if (n > kUnitaryMaxQubits)
    throw GuardExceeded("phase_align: n > 3");
  std::size_t dim = std::size_t{1} << n;
  BitVec zero(n);

  // rho = U H^n |0><0| H^n U^dag from exact Pauli expectations.
  std::vector<std::vector<cplx>> rho(dim, std::vector<cplx>(dim, 0.0));
  try {
    for (std::size_t zf = 0; zf < dim; ++zf) {
      for (std::size_t xf = 0; xf < dim; ++xf) {
        PauliWord w(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (zf >> i & 1) w.z.set(i, true);
          if (xf >> i & 1) w.x.set(i, true);
        }
        SignedPauli p(w, 0);
        double e = 2.0 * o.exact_pr_plus(zero, p, true) - 1.0;
        if (std::abs(e) < 1e-15) continue;
        // Accumulate e * sigma_p / dim column by column.
        for (std::size_t col = 0; col < dim; ++col) {
          StateVector basis(n, col);
          StateVector out = apply_pauli_dense(basis, p);
          for (std::size_t row = 0; row < dim; ++row)
            rho[row][col] += e * out.amps[row] / static_cast<double>(dim);
        }
      }
    }
  } catch (const Error&) {
    return hyp;  // xbasis preparation not frame-representable
  }

  // Extract the pure-state vector y and its phases in the hypothesis basis.
  std::size_t best = 0;
  for (std::size_t j = 1; j < dim; ++j)
    if (rho[j][j].real() > rho[best][best].real()) best = j;
  if (rho[best][best].real() < 1e-9) return hyp;
  std::vector<cplx> y(dim);
  double norm = std::sqrt(rho[best][best].real());
  for (std::size_t i = 0; i < dim; ++i) y[i] = rho[i][best] / norm;

  DenseMatrix uhat = reconstruct_unitary(hyp);
  std::vector<cplx> c(dim, 0.0);
  for (std::size_t v = 0; v < dim; ++v)
    for (std::size_t i = 0; i < dim; ++i)
      c[v] += std::conj(uhat[i][v]) * y[i];

  const double pi = std::numbers::pi;
  std::vector<int> m(dim, 0);
  double expect_mag = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t v = 0; v < dim; ++v) {
    if (std::abs(std::abs(c[v]) - expect_mag) > 1e-6) return hyp;
    double th = std::arg(c[v] / c[0]);
    double steps = th / (pi / 4.0);
    long r = std::lround(steps);
    if (std::abs(steps - static_cast<double>(r)) > 1e-6) return hyp;
    m[v] = static_cast<int>(((r % 8) + 8) % 8);
  }

  // Fit m_v = sum_i a_i v_i + 4 sum_{i<j} b_ij v_i v_j (mod 8).
  std::vector<int> a(n, 0);
  for (std::size_t i = 0; i < n; ++i) a[i] = m[std::size_t{1} << i];
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int t = (m[(std::size_t{1} << i) | (std::size_t{1} << j)] - a[i] - a[j]) %
              8;
      t = (t + 8) % 8;
      if (t == 0)
        b[i][j] = 0;
      else if (t == 4)
        b[i][j] = 1;
      else
        return hyp;
    }
  }
  for (std::size_t v = 0; v < dim; ++v) {
    int pred = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v >> i & 1) {
        pred += a[i];
        for (std::size_t j = i + 1; j < n; ++j)
          if (v >> j & 1) pred += 4 * b[i][j];
      }
    if (((pred % 8) + 8) % 8 != m[v]) return hyp;
  }

  Circuit out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int r = a[i];
    if (r >= 4) {
      out.gates.emplace_back(GateKind::Z, i);
      r -= 4;
    }
    if (r >= 2) {
      out.gates.emplace_back(GateKind::S, i);
      r -= 2;
    }
    if (r == 1) out.gates.emplace_back(GateKind::T, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (b[i][j]) out.gates.emplace_back(GateKind::CZ, i, j);
  out.gates.insert(out.gates.end(), hyp.gates.begin(), hyp.gates.end());
  return out;
}

Circuit learn_tdepth1(OracleSession& o, Rng& rng, TDepth1LearnStats* stats) {
  TDepth1LearnStats local;
  TDepth1LearnStats& st = stats ? *stats : local;
  for (std::size_t tries = 0;; ++tries) {
    ++st.attempts;
    try {
      Circuit c = attempt(o, rng, st);
      st.copies = o.ledger().copies_prepared;
      return c;
    } catch (const RankDeficient&) {
      if (tries + 1 >= 3) throw;
    } catch (const SearchFailed&) {
      if (tries + 1 >= 3) throw;
    } catch (const InconsistentTarget&) {
      if (tries + 1 >= 3) throw;
    }
  }
}

}  // namespace stablearn
