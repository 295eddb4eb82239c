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

#include "stablearn/pauli.hpp"

#include "stablearn/errors.hpp"

namespace stablearn {

int symplectic_product(const PauliWord& a, const PauliWord& b) {
  if (a.n != b.n) throw Error("symplectic_product: dimension mismatch");
  return (BitVec::dot(a.z, b.x) ^ BitVec::dot(a.x, b.z)) ? 1 : 0;
}

SignedPauli multiply(const SignedPauli& a, const SignedPauli& b) {
  if (a.word.n != b.word.n) throw Error("multiply: dimension mismatch");
  // Write each factor as i^y X^x Z^z with y = |z & x| (Y = iXZ); commuting
  // Z^za past X^xb costs (-1)^<za, xb>.
  std::size_t ya = BitVec::and_popcount(a.word.z, a.word.x);
  std::size_t yb = BitVec::and_popcount(b.word.z, b.word.x);
  std::size_t cross = BitVec::and_popcount(a.word.z, b.word.x);
  SignedPauli r;
  r.word = a.word;
  r.word ^= b.word;
  std::size_t yc = BitVec::and_popcount(r.word.z, r.word.x);
  std::size_t ph = a.phase + b.phase + ya + yb + 2 * cross + 3 * yc;
  r.phase = static_cast<std::uint8_t>(ph & 3);
  return r;
}

bool conjugate_negates(const SignedPauli& p) {
  return BitVec::and_popcount(p.word.z, p.word.x) & 1;
}

SignedPauli parse_pauli(const std::string& text) {
  std::size_t pos = 0;
  std::uint8_t phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = static_cast<std::uint8_t>((phase + 1) & 3);
    ++pos;
  }
  std::size_t n = text.size() - pos;
  if (n == 0) throw Error("parse_pauli: empty word");
  SignedPauli p(n);
  p.phase = phase;
  for (std::size_t i = 0; i < n; ++i) {
    switch (text[pos + i]) {
      case 'I':
        break;
      case 'X':
        p.word.x.set(i, true);
        break;
      case 'Y':
        p.word.z.set(i, true);
        p.word.x.set(i, true);
        break;
      case 'Z':
        p.word.z.set(i, true);
        break;
      default:
        throw Error("parse_pauli: bad letter in \"" + text + "\"");
    }
  }
  return p;
}

std::string format_pauli(const SignedPauli& p) {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  std::string s = prefix[p.phase & 3];
  static const char letter[4] = {'I', 'X', 'Y', 'Z'};
  for (std::size_t i = 0; i < p.word.n; ++i) s += letter[p.word.site(i)];
  return s;
}

SignedPauli pauli_z(std::size_t n, std::size_t q) {
  SignedPauli p(n);
  p.word.z.set(q, true);
  return p;
}

SignedPauli pauli_x(std::size_t n, std::size_t q) {
  SignedPauli p(n);
  p.word.x.set(q, true);
  return p;
}

SignedPauli pauli_y(std::size_t n, std::size_t q) {
  SignedPauli p(n);
  p.word.z.set(q, true);
  p.word.x.set(q, true);
  return p;
}

SignedPauli pauli_identity(std::size_t n) { return SignedPauli(n); }

}  // namespace stablearn
