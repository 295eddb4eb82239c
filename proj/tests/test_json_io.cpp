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

#include <cstdio>

#include "stablearn/errors.hpp"
#include "stablearn/json_io.hpp"
#include "stablearn/random_targets.hpp"
#include "stablearn/rng.hpp"

using namespace stablearn;
using nlohmann::json;

TEST_CASE("circuit round trip") {
  Circuit c(3);
  c.gates.emplace_back(GateKind::H, 0);
  c.gates.emplace_back(GateKind::CX, 0, 2);
  c.gates.emplace_back(GateKind::T, 1);
  json j = circuit_to_json(c);
  CHECK(j["n"] == 3);
  Circuit back = circuit_from_json(j);
  REQUIRE(back.gates.size() == 3);
  CHECK(back.n == 3);
  CHECK(back.gates[1].kind == GateKind::CX);
  CHECK(back.gates[1].q0 == 0);
  CHECK(back.gates[1].q1 == 2);
}

TEST_CASE("circuit json validation") {
  CHECK_THROWS_AS(circuit_from_json(json::parse(R"({"gates":[]})")), Error);
  CHECK_THROWS_AS(
      circuit_from_json(json::parse(R"({"n":1,"gates":[{"g":"Q","q":[0]}]})")),
      Error);
  CHECK_THROWS_AS(
      circuit_from_json(json::parse(R"({"n":1,"gates":[{"g":"H","q":[4]}]})")),
      Error);
}

TEST_CASE("clifford target round trip") {
  Rng rng(173);
  TargetSpec spec = random_clifford_target(3, rng);
  json j = target_to_json(spec);
  TargetSpec back = target_from_json(j);
  CHECK(back.kind == TargetSpec::Kind::Clifford);
  CHECK(back.n == 3);
  CHECK(target_to_json(back) == j);
}

TEST_CASE("tdepth1 target round trip with v bitstring") {
  Rng rng(179);
  TargetSpec spec = random_tdepth1_target(4, 2, rng);
  json j = target_to_json(spec);
  REQUIRE(j.contains("v"));
  std::string v = j["v"].get<std::string>();
  REQUIRE(v.size() == 4);
  // Leftmost character is qubit 0.
  for (std::size_t q = 0; q < 4; ++q)
    CHECK((v[q] == '1') == spec.v.get(q));
  TargetSpec back = target_from_json(j);
  CHECK(back.kind == TargetSpec::Kind::TDepth1);
  CHECK(back.v == spec.v);
  CHECK(target_to_json(back) == j);
}

TEST_CASE("digest is stable and sensitive") {
  json a = json::parse(R"({"n":1,"gates":[{"g":"H","q":[0]}]})");
  std::string d1 = json_digest(a);
  CHECK(d1 == json_digest(a));
  CHECK(d1.size() == 16);
  json b = a;
  b["gates"][0]["g"] = "S";
  CHECK(json_digest(b) != d1);
}

TEST_CASE("file round trip") {
  json j = json::parse(R"({"n":2,"gates":[{"g":"CZ","q":[0,1]}]})");
  std::string path = "stablearn_test_io.json";
  save_json_file(path, j);
  CHECK(load_json_file(path) == j);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json_file("stablearn_missing_file.json"), Error);
}
