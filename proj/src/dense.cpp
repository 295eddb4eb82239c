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

#include "stablearn/dense.hpp"

#include <cmath>

#include "stablearn/errors.hpp"

namespace stablearn {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

std::size_t word_bits(const BitVec& v) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) r |= std::size_t{1} << i;
  return r;
}

}  // namespace

void apply_gate_dense(StateVector& s, const Gate& g) {
  std::size_t dim = s.amps.size();
  std::size_t m0 = std::size_t{1} << g.q0;
  const cplx im(0.0, 1.0);
  switch (g.kind) {
    case GateKind::H: {
      double r = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) continue;
        cplx a = s.amps[i], b = s.amps[i | m0];
        s.amps[i] = r * (a + b);
        s.amps[i | m0] = r * (a - b);
      }
      return;
    }
    case GateKind::S:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) s.amps[i] *= im;
      return;
    case GateKind::Sdg:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) s.amps[i] *= -im;
      return;
    case GateKind::T: {
      cplx w = std::exp(im * (kPi / 4.0));
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) s.amps[i] *= w;
      return;
    }
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & m0)) std::swap(s.amps[i], s.amps[i | m0]);
      return;
    case GateKind::Y:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) continue;
        cplx a = s.amps[i], b = s.amps[i | m0];
        s.amps[i] = -im * b;
        s.amps[i | m0] = im * a;
      }
      return;
    case GateKind::Z:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) s.amps[i] = -s.amps[i];
      return;
    case GateKind::CX: {
      std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & m0) && !(i & m1)) std::swap(s.amps[i], s.amps[i | m1]);
      return;
    }
    case GateKind::CZ: {
      std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & m0) && (i & m1)) s.amps[i] = -s.amps[i];
      return;
    }
    case GateKind::SWAP: {
      std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & m0) && !(i & m1)) std::swap(s.amps[i], s.amps[(i ^ m0) | m1]);
      return;
    }
  }
}

StateVector run_circuit(const Circuit& c, const BitVec& input) {
  if (c.n > kDenseMaxQubits) throw GuardExceeded("run_circuit: n > 14");
  c.validate();
  StateVector s(c.n, word_bits(input));
  for (const auto& g : c.gates) apply_gate_dense(s, g);
  return s;
}

StateVector conjugate_state(const StateVector& s) {
  StateVector r = s;
  for (auto& a : r.amps) a = std::conj(a);
  return r;
}

StateVector apply_pauli_dense(const StateVector& s, const SignedPauli& p) {
  // sigma = i^{phase + |z&x|} X^x Z^z (Y = iXZ convention).
  std::size_t xm = word_bits(p.word.x);
  std::size_t y = BitVec::and_popcount(p.word.z, p.word.x);
  const cplx iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx front = iphase[(p.phase + y) & 3];
  StateVector r = s;
  for (std::size_t u = 0; u < s.amps.size(); ++u) {
    std::size_t zpar = 0;
    for (std::size_t i = 0; i < p.word.n; ++i)
      if (p.word.z.get(i) && (u >> i & 1)) zpar ^= 1;
    cplx f = front * (zpar ? -1.0 : 1.0);
    r.amps[u ^ xm] = f * s.amps[u];
  }
  return r;
}

double pauli_expectation(const StateVector& s, const SignedPauli& p) {
  StateVector ps = apply_pauli_dense(s, p);
  cplx e = 0.0;
  for (std::size_t u = 0; u < s.amps.size(); ++u)
    e += std::conj(s.amps[u]) * ps.amps[u];
  if (p.hermitian() && std::abs(e.imag()) > 1e-12)
    throw Error("pauli_expectation: non-real expectation of Hermitian Pauli");
  return e.real();
}

std::map<PauliWord, double> bell_distribution(const StateVector& a,
                                              const StateVector& b) {
  if (a.n != b.n) throw Error("bell_distribution: size mismatch");
  if (a.n > kBellTableMaxQubits) throw GuardExceeded("bell_distribution: n > 7");
  std::size_t n = a.n;
  std::map<PauliWord, double> table;
  double norm = 1.0 / static_cast<double>(std::size_t{1} << n);
  // <Phi+|^n (I x sigma_r)|a>|b> = 2^{-n/2} <a*| sigma_r |b>, so
  // Pr(r) = |sum_u a_u (sigma_r b)_u|^2 / 2^n.
  for (std::size_t zi = 0; zi < (std::size_t{1} << n); ++zi) {
    for (std::size_t xi = 0; xi < (std::size_t{1} << n); ++xi) {
      PauliWord w(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (zi >> i & 1) w.z.set(i, true);
        if (xi >> i & 1) w.x.set(i, true);
      }
      StateVector sb = apply_pauli_dense(b, SignedPauli(w, 0));
      cplx amp = 0.0;
      for (std::size_t u = 0; u < a.amps.size(); ++u)
        amp += a.amps[u] * sb.amps[u];
      table[w] = std::norm(amp) * norm;
    }
  }
  return table;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  cplx r = 0.0;
  for (std::size_t u = 0; u < a.amps.size(); ++u)
    r += std::conj(a.amps[u]) * b.amps[u];
  return r;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
  if (a.n != b.n) return false;
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

DenseMatrix reconstruct_unitary(const Circuit& c) {
  if (c.n > kUnitaryMaxQubits) throw GuardExceeded("reconstruct_unitary: n > 3");
  std::size_t dim = std::size_t{1} << c.n;
  DenseMatrix m(dim, std::vector<cplx>(dim, 0.0));
  for (std::size_t col = 0; col < dim; ++col) {
    BitVec v(c.n);
    for (std::size_t i = 0; i < c.n; ++i)
      if (col >> i & 1) v.set(i, true);
    StateVector s = run_circuit(c, v);
    for (std::size_t row = 0; row < dim; ++row) m[row][col] = s.amps[row];
  }
  return m;
}

bool compare_unitaries_up_to_phase(const DenseMatrix& a, const DenseMatrix& b,
                                   double tol) {
  if (a.size() != b.size()) return false;
  std::size_t dim = a.size();
  // Align on the entry of largest magnitude in b.
  std::size_t ri = 0, ci = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (std::abs(b[i][j]) > best) best = std::abs(b[i][j]), ri = i, ci = j;
  if (best < tol || std::abs(a[ri][ci]) == 0.0) return false;
  cplx phase = a[ri][ci] / b[ri][ci];
  phase /= std::abs(phase);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (std::abs(a[i][j] - phase * b[i][j]) > tol) return false;
  return true;
}

StateVector dense_from_frame(const PauliFrame& f) {
  if (f.n > kDenseMaxQubits) throw GuardExceeded("dense_from_frame: n > 14");
  std::size_t dim = std::size_t{1} << f.n;
  for (std::size_t basis = 0; basis < dim; ++basis) {
    StateVector s(f.n, basis);
    // Project with (I + g_i)/2 for each generator.
    for (const auto& g : f.rows) {
      StateVector gs = apply_pauli_dense(s, g);
      for (std::size_t u = 0; u < dim; ++u)
        s.amps[u] = 0.5 * (s.amps[u] + gs.amps[u]);
    }
    double norm = 0.0;
    for (const auto& a : s.amps) norm += std::norm(a);
    if (norm > 1e-9) {
      double r = 1.0 / std::sqrt(norm);
      for (auto& a : s.amps) a *= r;
      return s;
    }
  }
  throw Error("dense_from_frame: empty projector (invalid frame)");
}

}  // namespace stablearn
