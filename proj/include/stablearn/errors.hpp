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

#include <stdexcept>
#include <string>

namespace stablearn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// GF(2) rank of harvested words below the required threshold.
struct RankDeficient : Error {
  using Error::Error;
};

/// Primary-stabilizer search exhausted without finding 2k primaries.
struct SearchFailed : Error {
  using Error::Error;
};

/// Learned data violates the commutation relations the target must satisfy.
struct InconsistentTarget : Error {
  using Error::Error;
};

/// The requested T stage has no isotropic+pairs representation (joint
/// X-dependence across distinct pairs).
struct NotRepresentable : Error {
  using Error::Error;
};

/// Desk-scale guard (dense simulator size, component enumeration) exceeded.
struct GuardExceeded : Error {
  using Error::Error;
};

}  // namespace stablearn
