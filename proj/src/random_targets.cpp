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

#include "stablearn/random_targets.hpp"

#include "stablearn/errors.hpp"
#include "stablearn/expanded_frame.hpp"

namespace stablearn {

Circuit random_clifford_circuit(std::size_t n, Rng& rng) {
  static const GateKind kOne[] = {GateKind::H, GateKind::S,  GateKind::Sdg,
                                  GateKind::X, GateKind::Y,  GateKind::Z};
  static const GateKind kTwo[] = {GateKind::CX, GateKind::CZ, GateKind::SWAP};
  Circuit c(n);
  std::size_t count = 20 * n * n;
  for (std::size_t i = 0; i < count; ++i) {
    bool two = n >= 2 && rng.below(3) == 0;
    if (two) {
      std::size_t a = rng.below(n);
      std::size_t b = rng.below(n - 1);
      if (b >= a) ++b;
      c.gates.emplace_back(kTwo[rng.below(3)], a, b);
    } else {
      c.gates.emplace_back(kOne[rng.below(6)], rng.below(n));
    }
  }
  return c;
}

TargetSpec random_clifford_target(std::size_t n, Rng& rng) {
  return TargetSpec::clifford(random_clifford_circuit(n, rng));
}

namespace {

struct FrameShape {
  std::vector<PauliWord> words;  // isotropic rows, then g/h per pair
  BitVec signs;                  // matching sign bits
};

FrameShape shape_of(const ExpandedFrame& e) {
  FrameShape s;
  for (const auto& g : e.isotropic) s.words.push_back(g.word);
  for (const auto& p : e.pairs) {
    s.words.push_back(p.g.word);
    s.words.push_back(p.h.word);
  }
  s.signs = BitVec(s.words.size());
  std::size_t i = 0;
  for (const auto& g : e.isotropic) s.signs.set(i++, g.sign() < 0);
  for (const auto& p : e.pairs) {
    s.signs.set(i++, p.g.sign() < 0);
    s.signs.set(i++, p.h.sign() < 0);
  }
  return s;
}

}  // namespace

bool target_is_basis_uniform(const TargetSpec& t) {
  if (t.kind != TargetSpec::Kind::TDepth1) return true;
  std::size_t n = t.n;
  if (n > 10) {
    // Too many basis inputs to sweep; only representability of 0^n has
    // been checked by the caller.
    return true;
  }
  std::vector<FrameShape> shapes;
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    BitVec in(n);
    for (std::size_t j = 0; j < n; ++j) in.set(j, (b >> j) & 1);
    ExpandedFrame e = build_tdepth1(t.c1, t.v, t.c2, in);
    shapes.push_back(shape_of(e));
    if (shapes.back().words != shapes[0].words) return false;
  }
  // Sign linearity across all inputs.
  std::size_t rows = shapes[0].words.size();
  for (std::size_t b = 0; b < shapes.size(); ++b) {
    BitVec want = shapes[0].signs;
    for (std::size_t j = 0; j < n; ++j) {
      if (!((b >> j) & 1)) continue;
      BitVec d = shapes[std::size_t{1} << j].signs;
      d ^= shapes[0].signs;
      want ^= d;
    }
    if (!(want == shapes[b].signs)) return false;
  }
  (void)rows;
  return true;
}

TargetSpec random_tdepth1_target(std::size_t n, std::size_t k, Rng& rng,
                                 TDepth1GenStats* stats) {
  if (k > n) throw Error("random_tdepth1_target: k > n");
  TDepth1GenStats local;
  TDepth1GenStats& st = stats ? *stats : local;
  for (;;) {
    ++st.attempts;
    Circuit c1 = random_clifford_circuit(n, rng);
    Circuit c2 = random_clifford_circuit(n, rng);
    BitVec v(n);
    for (std::size_t picked = 0; picked < k;) {
      std::size_t q = rng.below(n);
      if (!v.get(q)) {
        v.set(q, true);
        ++picked;
      }
    }
    TargetSpec t = TargetSpec::tdepth1(c1, v, c2);
    try {
      bool ok = true;
      if (n <= 10) {
        ok = target_is_basis_uniform(t);
        if (!ok) ++st.rejected_nonuniform;
      } else {
        build_tdepth1(t.c1, t.v, t.c2, BitVec(n));
      }
      if (ok) return t;
    } catch (const NotRepresentable&) {
      ++st.rejected_unrepresentable;
    }
  }
}

}  // namespace stablearn
