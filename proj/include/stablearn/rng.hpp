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

#include <cstdint>
#include <random>
#include <string>

namespace stablearn {

/// Seedable, splittable RNG: mt19937_64 streams derived through splitmix64
/// so every split is independent of draw order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  static std::string algorithm_id() { return "mt19937_64/splitmix64"; }

  /// Independent child stream; deterministic in (seed, index).
  Rng split(std::uint64_t index) const {
    return Rng(splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
  }

  bool bit() { return (eng_() >> 63) & 1; }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
    return d(eng_);
  }

  double uniform() {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(eng_);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace stablearn
