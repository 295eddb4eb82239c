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

#include <string>

#include <json.hpp>

#include "stablearn/oracle.hpp"

namespace stablearn {

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// Clifford targets serialize as a plain circuit; T-depth-one targets as
/// {"n", "c1", "v", "c2"} with v a bitstring (leftmost char = qubit 0).
nlohmann::json target_to_json(const TargetSpec& t);
TargetSpec target_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

/// FNV-1a digest of the compact serialization, as fixed-width hex.
std::string json_digest(const nlohmann::json& j);

}  // namespace stablearn
