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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stablearn/clifford_learner.hpp"
#include "stablearn/dense.hpp"
#include "stablearn/errors.hpp"
#include "stablearn/json_io.hpp"
#include "stablearn/random_targets.hpp"
#include "stablearn/synthesis.hpp"
#include "stablearn/tdepth1_learner.hpp"

namespace py = pybind11;
using namespace stablearn;
using nlohmann::json;

namespace {

BitVec bits_of(const std::string& s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v.set(i, s[i] == '1');
  return v;
}

std::string gen_target(const std::string& kind, std::size_t n, std::size_t k,
                       std::uint64_t seed) {
  Rng rng(seed);
  TargetSpec t = kind == "clifford" ? random_clifford_target(n, rng)
                                    : random_tdepth1_target(n, k, rng);
  return target_to_json(t).dump();
}

py::dict learn(const std::string& target_json, const std::string& algo,
               std::uint64_t seed, const std::string& backend_name) {
  TargetSpec target = target_from_json(json::parse(target_json));
  Backend backend =
      backend_name == "dense" ? Backend::Dense : Backend::Frame;
  OracleSession session(target, backend);
  Rng rng(seed);
  py::dict out;
  if (algo == "clifford") {
    CliffordLearnStats st;
    Circuit hyp = learn_clifford(session, rng, &st);
    out["hypothesis"] = circuit_to_json(hyp).dump();
    out["queries"] = st.copies;
    out["budget"] = clifford_budget(target.n);
  } else {
    TDepth1LearnStats st;
    Circuit hyp = learn_tdepth1(session, rng, &st);
    out["hypothesis"] = circuit_to_json(hyp).dump();
    out["queries"] = st.copies;
    out["budget"] = tdepth1_budget(target.n, st.k);
    out["k_hat"] = st.k;
  }
  return out;
}

py::dict verify_basis(const std::string& target_json,
                      const std::string& hypothesis_json, double tol) {
  TargetSpec target = target_from_json(json::parse(target_json));
  Circuit hyp = circuit_from_json(json::parse(hypothesis_json));
  Circuit tc = target.flat();
  std::vector<double> fids;
  bool pass = true;
  for (std::size_t b = 0; b < (std::size_t{1} << tc.n); ++b) {
    BitVec in(tc.n);
    for (std::size_t j = 0; j < tc.n; ++j) in.set(j, (b >> j) & 1);
    double f = std::abs(inner_product(run_circuit(tc, in), run_circuit(hyp, in)));
    fids.push_back(f);
    if (f < 1.0 - tol) pass = false;
  }
  py::dict out;
  out["pass"] = pass;
  out["fidelities"] = fids;
  return out;
}

std::vector<std::complex<double>> statevector(const std::string& circuit_json,
                                              const std::string& input) {
  Circuit c = circuit_from_json(json::parse(circuit_json));
  BitVec in = input.empty() ? BitVec(c.n) : bits_of(input);
  return run_circuit(c, in).amps;
}

py::dict bell_table(const std::string& target_json, bool conj) {
  TargetSpec target = target_from_json(json::parse(target_json));
  OracleSession session(target, Backend::Frame);
  py::dict out;
  for (const auto& [w, pr] :
       session.exact_bell_distribution(BitVec(target.n), false, conj))
    if (pr > 1e-15) out[py::str(format_pauli(SignedPauli(w, 0)))] = pr;
  return out;
}

double pauli_pr_plus(const std::string& target_json, const std::string& op) {
  TargetSpec target = target_from_json(json::parse(target_json));
  OracleSession session(target, Backend::Frame);
  return session.exact_pr_plus(BitVec(target.n), parse_pauli(op));
}

}  // namespace

PYBIND11_MODULE(stablearn, m) {
  m.doc() = "Learning Clifford and T-depth-one circuits from Bell samples";
  m.def("gen_target", &gen_target, py::arg("kind"), py::arg("n"),
        py::arg("k") = 0, py::arg("seed") = 0);
  m.def("learn", &learn, py::arg("target_json"), py::arg("algo"),
        py::arg("seed") = 0, py::arg("backend") = "frame");
  m.def("verify_basis", &verify_basis, py::arg("target_json"),
        py::arg("hypothesis_json"), py::arg("tol") = 1e-9);
  m.def("statevector", &statevector, py::arg("circuit_json"),
        py::arg("input") = "");
  m.def("bell_table", &bell_table, py::arg("target_json"),
        py::arg("conj") = false);
  m.def("pauli_pr_plus", &pauli_pr_plus, py::arg("target_json"),
        py::arg("op"));

  py::register_exception<Error>(m, "StablearnError");
}
