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

#include "stablearn/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "stablearn/errors.hpp"

namespace stablearn {

using nlohmann::json;

namespace {

json gates_to_json(const std::vector<Gate>& gates) {
  json arr = json::array();
  for (const auto& g : gates) {
    json q = json::array();
    q.push_back(g.q0);
    if (gate_is_two_qubit(g.kind)) q.push_back(g.q1);
    arr.push_back({{"g", gate_name(g.kind)}, {"q", q}});
  }
  return arr;
}

std::vector<Gate> gates_from_json(const json& arr) {
  std::vector<Gate> gates;
  for (const auto& e : arr) {
    GateKind k = gate_from_name(e.at("g").get<std::string>());
    const auto& q = e.at("q");
    if (gate_is_two_qubit(k)) {
      if (q.size() != 2) throw Error("gate json: expected two qubit indices");
      gates.emplace_back(k, q[0].get<std::size_t>(), q[1].get<std::size_t>());
    } else {
      if (q.size() != 1) throw Error("gate json: expected one qubit index");
      gates.emplace_back(k, q[0].get<std::size_t>());
    }
  }
  return gates;
}

}  // namespace

json circuit_to_json(const Circuit& c) {
  return {{"n", c.n}, {"gates", gates_to_json(c.gates)}};
}

Circuit circuit_from_json(const json& j) {
  try {
    Circuit c(j.at("n").get<std::size_t>());
    c.gates = gates_from_json(j.at("gates"));
    c.validate();
    return c;
  } catch (const json::exception& ex) {
    throw Error(std::string("circuit json: ") + ex.what());
  }
}

json target_to_json(const TargetSpec& t) {
  if (t.kind == TargetSpec::Kind::Clifford) return circuit_to_json(t.circuit);
  std::string v;
  for (std::size_t i = 0; i < t.n; ++i) v.push_back(t.v.get(i) ? '1' : '0');
  return {{"n", t.n},
          {"c1", gates_to_json(t.c1.gates)},
          {"v", v},
          {"c2", gates_to_json(t.c2.gates)}};
}

TargetSpec target_from_json(const json& j) try {
  if (!j.contains("c1")) return TargetSpec::clifford(circuit_from_json(j));
  std::size_t n = j.at("n").get<std::size_t>();
  Circuit c1(n), c2(n);
  c1.gates = gates_from_json(j.at("c1"));
  c2.gates = gates_from_json(j.at("c2"));
  std::string vs = j.at("v").get<std::string>();
  if (vs.size() != n) throw Error("target json: v length != n");
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vs[i] != '0' && vs[i] != '1') throw Error("target json: bad v bit");
    v.set(i, vs[i] == '1');
  }
  return TargetSpec::tdepth1(c1, v, c2);
} catch (const json::exception& ex) {
  throw Error(std::string("target json: ") + ex.what());
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string json_digest(const json& j) {
  std::string s = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace stablearn
