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

#include <algorithm>
#include <cmath>

#include "stablearn/clifford_learner.hpp"
#include "stablearn/dense.hpp"
#include "stablearn/random_targets.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/synthesis.hpp"
#include "stablearn/tdepth1_learner.hpp"

using namespace stablearn;

namespace {

TargetSpec worked_example() {
  Circuit c1(2), c2(2);
  c1.gates.emplace_back(GateKind::H, 0);
  c1.gates.emplace_back(GateKind::H, 1);
  c2.gates.emplace_back(GateKind::SWAP, 0, 1);
  c2.gates.emplace_back(GateKind::CZ, 0, 1);
  BitVec v(2);
  v.set(0, true);
  v.set(1, true);
  return TargetSpec::tdepth1(c1, v, c2);
}

bool basis_match(const TargetSpec& spec, const Circuit& hyp, double tol) {
  Circuit tc = spec.flat();
  for (std::size_t b = 0; b < (std::size_t{1} << spec.n); ++b) {
    BitVec in(spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) in.set(j, (b >> j) & 1);
    double f =
        std::abs(inner_product(run_circuit(tc, in), run_circuit(hyp, in)));
    if (f < 1.0 - tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("learn_stabilizer_group recovers the output stabilizers") {
  Rng rng(113);
  for (int t = 0; t < 5; ++t) {
    TargetSpec spec = random_clifford_target(4, rng);
    OracleSession o(spec, Backend::Frame);
    BitVec in(4);
    in.set(t % 4, true);
    auto gens = learn_stabilizer_group(o, in, false, rng);
    REQUIRE(gens.size() == 4);
    StateVector psi = run_circuit(spec.flat(), in);
    for (const auto& g : gens)
      CHECK(pauli_expectation(psi, g) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("learn_clifford fixed small circuits") {
  Rng rng(127);
  Circuit h(1);
  h.gates.emplace_back(GateKind::H, 0);
  Circuit cx(2);
  cx.gates.emplace_back(GateKind::CX, 0, 1);
  Circuit s(1);
  s.gates.emplace_back(GateKind::S, 0);
  for (const Circuit& c : {h, cx, s}) {
    TargetSpec spec = TargetSpec::clifford(c);
    OracleSession o(spec, Backend::Frame);
    Circuit hyp = learn_clifford(o, rng);
    CHECK(tableau_equal(tableau_of(hyp), tableau_of(c)));
  }
}

TEST_CASE("learn_clifford random targets within budget") {
  Rng rng(131);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 2 + rng.below(4);
    TargetSpec spec = random_clifford_target(n, rng);
    OracleSession o(spec, Backend::Frame);
    CliffordLearnStats st;
    Circuit hyp = learn_clifford(o, rng, &st);
    CHECK(tableau_equal(tableau_of(hyp), tableau_of(spec.circuit)));
    CHECK(st.copies ==
          o.ledger().copies_prepared);
    CHECK(st.copies <=
          clifford_pass_budget(n) * (st.z_attempts + st.x_attempts));
  }
}

TEST_CASE("learn_clifford works on the dense backend") {
  Rng rng(137);
  TargetSpec spec = random_clifford_target(3, rng);
  OracleSession o(spec, Backend::Dense);
  Circuit hyp = learn_clifford(o, rng);
  CHECK(tableau_equal(tableau_of(hyp), tableau_of(spec.circuit)));
}

TEST_CASE("classification constants on the worked example") {
  TargetSpec spec = worked_example();
  OracleSession o(spec, Backend::Frame);
  BitVec zero(2);
  const double primary = (2.0 + std::sqrt(2.0)) / 4.0;
  CHECK(o.exact_pr_plus(zero, parse_pauli("ZX")) ==
        doctest::Approx(primary).epsilon(1e-14));
  CHECK(o.exact_pr_plus(zero, parse_pauli("YY")) ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK(o.exact_pr_plus(zero, parse_pauli("IZ")) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("classify_operator labels the worked example operators") {
  TargetSpec spec = worked_example();
  OracleSession o(spec, Backend::Frame);
  Rng rng(139);
  auto cls = [&](const char* p) {
    return classify_operator(o, parse_pauli(p), classify_shots(2), rng);
  };
  CHECK(cls("ZX").label == OpLabel::PrimaryPlus);
  CHECK(cls("-ZX").label == OpLabel::PrimaryMinus);
  CHECK(cls("YY").label == OpLabel::ProductM);
  CHECK(cls("YY").m == 2);
  CHECK(cls("IZ").label == OpLabel::NonMember);
}

TEST_CASE("learn_tdepth1 on the worked example") {
  TargetSpec spec = worked_example();
  OracleSession o(spec, Backend::Frame);
  Rng rng(149);
  TDepth1LearnStats st;
  Circuit hyp = learn_tdepth1(o, rng, &st);
  CHECK(st.k == 2);
  CHECK(basis_match(spec, hyp, 1e-9));
  CHECK(st.copies <= tdepth1_budget(2, 2));
}

TEST_CASE("learn_tdepth1 on random targets") {
  Rng rng(151);
  for (int t = 0; t < 6; ++t) {
    std::size_t n = 2 + t % 3;
    std::size_t k = t % (std::min<std::size_t>(n, 3) + 1);
    Rng gen = rng.split(t);
    TargetSpec spec = random_tdepth1_target(n, k, gen);
    OracleSession o(spec, Backend::Frame);
    Rng lr = rng.split(1000 + t);
    TDepth1LearnStats st;
    Circuit hyp = learn_tdepth1(o, lr, &st);
    CHECK(basis_match(spec, hyp, 1e-9));
    CHECK(st.copies <= tdepth1_budget(n, spec.k()));
  }
}

TEST_CASE("phase_align pins the global unitary") {
  Rng rng(157);
  int aligned = 0;
  for (int t = 0; t < 8; ++t) {
    std::size_t n = 1 + t % 3;
    std::size_t k = t % (std::min<std::size_t>(n, 3) + 1);
    Rng gen = rng.split(t);
    TargetSpec spec = random_tdepth1_target(n, k, gen);
    OracleSession o(spec, Backend::Frame);
    Rng lr = rng.split(2000 + t);
    Circuit hyp = learn_tdepth1(o, lr);
    REQUIRE(basis_match(spec, hyp, 1e-9));
    Circuit adj = phase_align(o, hyp);
    CHECK(basis_match(spec, adj, 1e-9));
    if (compare_unitaries_up_to_phase(reconstruct_unitary(adj),
                                      reconstruct_unitary(spec.flat()), 1e-9))
      ++aligned;
  }
  CHECK(aligned >= 7);
}

TEST_CASE("random tdepth1 targets are basis uniform") {
  Rng rng(163);
  for (int t = 0; t < 10; ++t) {
    Rng gen = rng.split(t);
    TargetSpec spec = random_tdepth1_target(3, 2, gen);
    CHECK(target_is_basis_uniform(spec));
    CHECK(spec.k() == 2);
  }
}

TEST_CASE("random clifford circuits have the documented length") {
  Rng rng(167);
  Circuit c = random_clifford_circuit(4, rng);
  CHECK(c.gates.size() == 20 * 4 * 4);
  CHECK(c.is_clifford());
}
