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

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "stablearn/clifford_learner.hpp"
#include "stablearn/dense.hpp"
#include "stablearn/errors.hpp"
#include "stablearn/json_io.hpp"
#include "stablearn/random_targets.hpp"
#include "stablearn/synthesis.hpp"
#include "stablearn/tdepth1_learner.hpp"

namespace {

using namespace stablearn;
using nlohmann::json;

constexpr std::size_t kVerifyMaxQubits = 8;
constexpr double kVerifyTol = 1e-9;

std::size_t thread_budget() {
  if (const char* env = std::getenv("STABLEARN_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

struct BasisCheck {
  bool pass = true;
  bool common_phase = true;
  std::vector<double> fidelities;
};

/// Per-basis-vector up-to-phase comparison of two circuits on the dense
/// reference, plus whether one global phase works across all vectors.
BasisCheck verify_basis(const Circuit& target, const Circuit& hyp,
                        double tol) {
  BasisCheck r;
  if (target.n != hyp.n) {
    r.pass = false;
    return r;
  }
  std::size_t n = target.n;
  std::complex<double> ref_phase(0.0, 0.0);
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    BitVec in(n);
    for (std::size_t j = 0; j < n; ++j) in.set(j, (b >> j) & 1);
    StateVector a = run_circuit(target, in);
    StateVector h = run_circuit(hyp, in);
    std::complex<double> ip = inner_product(a, h);
    double fid = std::abs(ip);
    r.fidelities.push_back(fid);
    if (fid < 1.0 - tol) r.pass = false;
    if (fid > 0.5) {
      std::complex<double> ph = ip / fid;
      if (std::abs(ref_phase) < 0.5)
        ref_phase = ph;
      else if (std::abs(ph - ref_phase) > 1e-6)
        r.common_phase = false;
    }
  }
  return r;
}

int cmd_gen_target(const std::string& kind, std::size_t n, std::size_t k,
                   std::uint64_t seed, const std::string& out) {
  if (k > n) {
    std::cerr << "error: k > n\n";
    return 2;
  }
  Rng rng(seed);
  TargetSpec t = kind == "clifford" ? random_clifford_target(n, rng)
                                    : random_tdepth1_target(n, k, rng);
  json j = target_to_json(t);
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(out, j);
  return 0;
}

int cmd_learn(const std::string& target_path, const std::string& algo,
              std::uint64_t seed, const std::string& backend_name,
              const std::string& out, const std::string& report_path) {
  json tj = load_json_file(target_path);
  TargetSpec target = target_from_json(tj);
  if (algo == "clifford" && target.kind != TargetSpec::Kind::Clifford) {
    std::cerr << "error: clifford learner requires a clifford target\n";
    return 2;
  }
  Backend backend =
      backend_name == "dense" ? Backend::Dense : Backend::Frame;

  json report;
  report["target_digest"] = json_digest(tj);
  report["n"] = target.n;
  report["k"] = target.kind == TargetSpec::Kind::TDepth1 ? target.k() : 0;
  report["seed"] = seed;
  report["backend"] = backend_name;
  report["rng"] = Rng::algorithm_id();
  report["algo"] = algo;

  OracleSession session(target, backend);
  Rng rng(seed);
  auto t0 = std::chrono::steady_clock::now();
  Circuit hyp;
  bool learned = false;
  std::string error;
  json queries;
  try {
    if (algo == "clifford") {
      CliffordLearnStats st;
      hyp = learn_clifford(session, rng, &st);
      queries["total"] = st.copies;
      queries["budget"] = clifford_budget(target.n);
      queries["z_attempts"] = st.z_attempts;
      queries["x_attempts"] = st.x_attempts;
      learned = true;
    } else {
      TDepth1LearnStats st;
      hyp = learn_tdepth1(session, rng, &st);
      if (target.n <= kUnitaryMaxQubits) hyp = phase_align(session, hyp);
      queries["total"] = st.copies;
      queries["budget"] = tdepth1_budget(target.n, st.k);
      queries["attempts"] = st.attempts;
      queries["classifications"] = st.classifications;
      queries["k_hat"] = st.k;
      learned = true;
    }
  } catch (const Error& e) {
    error = e.what();
    queries["total"] = session.ledger().copies_prepared;
  }
  auto t1 = std::chrono::steady_clock::now();
  report["queries"] = queries;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  bool success = learned;
  if (learned) {
    if (!out.empty()) save_json_file(out, circuit_to_json(hyp));
    if (target.n <= kVerifyMaxQubits) {
      BasisCheck chk = verify_basis(target.flat(), hyp, kVerifyTol);
      report["fidelities"] = chk.fidelities;
      report["common_phase"] = chk.common_phase;
      success = chk.pass;
    }
  } else {
    report["error"] = error;
  }
  report["success"] = success;
  if (report_path.empty())
    std::cout << report.dump(2) << "\n";
  else
    save_json_file(report_path, report);
  return success ? 0 : 1;
}

int cmd_verify(const std::string& target_path, const std::string& hyp_path,
               const std::string& mode, double tol) {
  TargetSpec target = target_from_json(load_json_file(target_path));
  Circuit hyp = circuit_from_json(load_json_file(hyp_path));
  Circuit tc = target.flat();
  json out;
  bool pass = false;
  if (mode == "unitary") {
    if (tc.n > kUnitaryMaxQubits) {
      std::cerr << "error: unitary mode requires n <= 3\n";
      return 2;
    }
    pass = compare_unitaries_up_to_phase(reconstruct_unitary(tc),
                                         reconstruct_unitary(hyp), tol);
  } else {
    BasisCheck chk = verify_basis(tc, hyp, tol);
    pass = chk.pass;
    out["fidelities"] = chk.fidelities;
    out["common_phase"] = chk.common_phase;
  }
  out["mode"] = mode;
  out["tol"] = tol;
  out["pass"] = pass;
  std::cout << out.dump(2) << "\n";
  return pass ? 0 : 1;
}

std::string word_text(const PauliWord& w) {
  SignedPauli p(w, 0);
  std::string s = format_pauli(p);
  return s;
}

int cmd_dist(const std::string& target_path, const std::string& what,
             const std::string& op, const std::string& input_bits,
             bool check_dense, const std::string& out_path) {
  TargetSpec target = target_from_json(load_json_file(target_path));
  std::size_t n = target.n;
  if (n > kBellTableMaxQubits) {
    std::cerr << "error: exact tables require n <= 7\n";
    return 2;
  }
  BitVec input(n);
  if (!input_bits.empty()) {
    if (input_bits.size() != n) {
      std::cerr << "error: input length != n\n";
      return 2;
    }
    for (std::size_t i = 0; i < n; ++i) input.set(i, input_bits[i] == '1');
  }
  OracleSession session(target, Backend::Frame);

  if (what == "pauli") {
    if (op.empty()) {
      std::cerr << "error: --op required for pauli\n";
      return 2;
    }
    SignedPauli p = parse_pauli(op);
    double pr = session.exact_pr_plus(input, p);
    std::cout << "pr_plus," << std::setprecision(15) << pr << "\n";
    if (check_dense) {
      StateVector s = run_circuit(target.flat(), input);
      double dpr = 0.5 * (1.0 + pauli_expectation(s, p));
      std::cout << "max_abs_deviation," << std::abs(pr - dpr) << "\n";
    }
    return 0;
  }

  bool conj = what == "bell-conj";
  auto table = session.exact_bell_distribution(input, false, conj);
  std::ostringstream os;
  os << "pauli_word_text,probability\n";
  os << std::setprecision(15);
  for (const auto& [w, pr] : table)
    if (pr > 1e-15) os << word_text(w) << "," << pr << "\n";
  if (out_path.empty())
    std::cout << os.str();
  else {
    std::ofstream f(out_path);
    f << os.str();
  }
  if (check_dense) {
    StateVector s = run_circuit(target.flat(), input);
    auto dense = conj ? bell_distribution(conjugate_state(s), s)
                      : bell_distribution(s, s);
    double dev = 0.0;
    for (const auto& [w, pr] : dense) {
      auto it = table.find(w);
      double f2 = it == table.end() ? 0.0 : it->second;
      dev = std::max(dev, std::abs(pr - f2));
    }
    for (const auto& [w, pr] : table)
      if (!dense.count(w)) dev = std::max(dev, pr);
    std::cout << "max_abs_deviation," << dev << "\n";
  }
  return 0;
}

struct TrialResult {
  bool success = false;
  std::uint64_t queries = 0;
  std::size_t attempts = 0;
  bool within_budget = false;
};

int cmd_bench(const std::string& suite, const std::string& n_range,
              std::size_t k_max, std::size_t trials, std::uint64_t seed,
              const std::string& report_path, bool timing) {
  std::size_t n_lo = 2, n_hi = 2;
  {
    std::size_t consumed = 0;
    auto pos = n_range.find("..");
    if (pos == std::string::npos) {
      n_lo = n_hi = static_cast<std::size_t>(std::stoul(n_range, &consumed));
      if (consumed != n_range.size())
        throw Error("bad --n-range (expected N or LO..HI): " + n_range);
    } else {
      n_lo = static_cast<std::size_t>(std::stoul(n_range.substr(0, pos)));
      n_hi = static_cast<std::size_t>(std::stoul(n_range.substr(pos + 2)));
    }
    if (n_lo == 0 || n_hi < n_lo)
      throw Error("bad --n-range: " + n_range);
  }
  Rng root(seed);
  json cells = json::array();
  auto suite_t0 = std::chrono::steady_clock::now();
  std::uint64_t cell_index = 0;

  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    std::vector<std::size_t> ks;
    if (suite == "clifford")
      ks.push_back(0);
    else
      for (std::size_t k = 0; k <= std::min(k_max, n); ++k) ks.push_back(k);
    for (std::size_t k : ks) {
      Rng cell_rng = root.split(cell_index++);
      std::vector<TrialResult> results(trials);
      auto run_trial = [&](std::size_t t) {
        Rng trng = cell_rng.split(t);
        Rng gen_rng = trng.split(0);
        Rng learn_rng = trng.split(1);
        TrialResult r;
        try {
          if (suite == "clifford") {
            TargetSpec target = random_clifford_target(n, gen_rng);
            OracleSession session(target, Backend::Frame);
            CliffordLearnStats st;
            Circuit hyp = learn_clifford(session, learn_rng, &st);
            r.queries = st.copies;
            r.attempts = st.z_attempts + st.x_attempts;
            r.within_budget = r.queries <= clifford_pass_budget(n) *
                                               (st.z_attempts + st.x_attempts);
            r.success = tableau_equal(tableau_of(hyp),
                                      tableau_of(target.circuit)) &&
                        r.within_budget;
          } else {
            TargetSpec target = random_tdepth1_target(n, k, gen_rng);
            OracleSession session(target, Backend::Frame);
            TDepth1LearnStats st;
            Circuit hyp = learn_tdepth1(session, learn_rng, &st);
            r.queries = st.copies;
            r.attempts = st.attempts;
            r.within_budget = r.queries <= tdepth1_budget(n, st.k);
            BasisCheck chk = verify_basis(target.flat(), hyp, kVerifyTol);
            r.success = chk.pass && r.within_budget;
          }
        } catch (const Error&) {
          r.success = false;
        }
        results[t] = r;
      };

      std::size_t workers = std::min(thread_budget(), trials);
      if (workers <= 1) {
        for (std::size_t t = 0; t < trials; ++t) run_trial(t);
      } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            for (std::size_t t = w * chunk;
                 t < std::min(trials, (w + 1) * chunk); ++t)
              run_trial(t);
          });
        }
        for (auto& th : pool) th.join();
      }

      std::size_t ok = 0;
      std::uint64_t qmax = 0, qsum = 0;
      for (const auto& r : results) {
        ok += r.success;
        qmax = std::max(qmax, r.queries);
        qsum += r.queries;
      }
      json cell;
      cell["n"] = n;
      if (suite != "clifford") cell["k"] = k;
      cell["trials"] = trials;
      cell["successes"] = ok;
      cell["success_rate"] = static_cast<double>(ok) / trials;
      cell["queries_max"] = qmax;
      cell["queries_mean"] = static_cast<double>(qsum) / trials;
      cells.push_back(cell);
      std::cerr << "bench " << suite << " n=" << n;
      if (suite != "clifford") std::cerr << " k=" << k;
      std::cerr << " ok=" << ok << "/" << trials << "\n";
    }
  }

  json report;
  report["suite"] = suite;
  report["seed"] = seed;
  report["rng"] = Rng::algorithm_id();
  report["trials"] = trials;
  report["cells"] = cells;
  if (timing) {
    auto suite_t1 = std::chrono::steady_clock::now();
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(suite_t1 - suite_t0).count();
  }
  if (report_path.empty())
    std::cout << report.dump(2) << "\n";
  else
    save_json_file(report_path, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stablearn: learn Clifford and T-depth-one circuits"};
  app.require_subcommand(1);

  std::string kind = "clifford", out, target_path, report_path, algo, mode =
      "basis", backend = "frame", hyp_path, what = "bell-psipsi", op,
      input_bits, n_range = "2..4", suite = "clifford";
  std::size_t n = 2, k = 0, trials = 20, k_max = 3;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool check_dense = false, timing = false;

  auto* gen = app.add_subcommand("gen-target", "Generate a random target");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"clifford", "tdepth1"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  auto* learn = app.add_subcommand("learn", "Run a learner against a target");
  learn->add_option("--target", target_path)->required();
  learn->add_option("--algo", algo)
      ->required()
      ->check(CLI::IsMember({"clifford", "tdepth1"}));
  learn->add_option("--seed", seed);
  learn->add_option("--backend", backend)
      ->check(CLI::IsMember({"frame", "dense"}));
  learn->add_option("--out", out);
  learn->add_option("--report", report_path);

  auto* verify = app.add_subcommand("verify", "Verify hypothesis vs target");
  verify->add_option("--target", target_path)->required();
  verify->add_option("--hypothesis", hyp_path)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"basis", "unitary"}));
  verify->add_option("--tol", tol);

  auto* dist = app.add_subcommand("dist", "Dump exact distributions");
  dist->add_option("--target", target_path)->required();
  dist->add_option("--what", what)
      ->check(CLI::IsMember({"bell-psipsi", "bell-conj", "pauli"}));
  dist->add_option("--op", op);
  dist->add_option("--input", input_bits);
  dist->add_flag("--check-dense", check_dense);
  dist->add_option("--out", out);

  auto* bench = app.add_subcommand("bench", "Seeded learning benchmark");
  bench->add_option("--suite", suite)
      ->check(CLI::IsMember({"clifford", "tdepth1"}));
  bench->add_option("--n-range", n_range);
  bench->add_option("--k-max", k_max);
  bench->add_option("--trials", trials);
  bench->add_option("--seed", seed);
  bench->add_option("--report", report_path);
  bench->add_flag("--timing", timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen_target(kind, n, k, seed, out);
    if (learn->parsed())
      return cmd_learn(target_path, algo, seed, backend, out, report_path);
    if (verify->parsed()) return cmd_verify(target_path, hyp_path, mode, tol);
    if (dist->parsed())
      return cmd_dist(target_path, what, op, input_bits, check_dense, out);
    if (bench->parsed())
      return cmd_bench(suite, n_range, k_max, trials, seed, report_path,
                       timing);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
