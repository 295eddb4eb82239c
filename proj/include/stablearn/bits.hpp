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

#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace stablearn {

/// Fixed-length bit vector packed into 64-bit lanes. All GF(2) row
/// operations reduce to word-wise XOR on these.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  bool any() const {
    for (auto v : w_)
      if (v) return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto v : w_) c += std::popcount(v);
    return c;
  }

  /// popcount(a & b)
  static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  /// parity of <a, b> over GF(2)
  static bool dot(const BitVec& a, const BitVec& b) {
    return and_popcount(a, b) & 1;
  }

  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && w_ == o.w_;
  }
  bool operator<(const BitVec& o) const { return w_ < o.w_; }

  /// Index of the lowest set bit, or size() if none.
  std::size_t lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return nbits_;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace stablearn
