# Copyright 2026 The stablearn authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math
import os
import subprocess
import tempfile

import pytest

import stablearn


def test_gen_learn_verify_clifford():
    target = stablearn.gen_target("clifford", 3, seed=7)
    spec = json.loads(target)
    assert spec["n"] == 3
    out = stablearn.learn(target, "clifford", seed=11)
    assert out["queries"] <= out["budget"]
    check = stablearn.verify_basis(target, out["hypothesis"])
    assert check["pass"]
    assert all(f >= 1 - 1e-9 for f in check["fidelities"])


def test_gen_learn_verify_tdepth1():
    target = stablearn.gen_target("tdepth1", 3, k=2, seed=5)
    spec = json.loads(target)
    assert spec["v"].count("1") == 2
    out = stablearn.learn(target, "tdepth1", seed=13)
    assert out["queries"] <= out["budget"]
    assert out["k_hat"] <= 2
    check = stablearn.verify_basis(target, out["hypothesis"])
    assert check["pass"]


def test_statevector():
    circuit = json.dumps({"n": 1, "gates": [{"g": "H", "q": [0]}]})
    amps = stablearn.statevector(circuit)
    assert amps[0] == pytest.approx(1 / math.sqrt(2))
    assert amps[1] == pytest.approx(1 / math.sqrt(2))
    amps = stablearn.statevector(circuit, input="1")
    assert amps[1] == pytest.approx(-1 / math.sqrt(2))


def test_bell_table_and_pauli():
    c1 = [{"g": "H", "q": [0]}, {"g": "H", "q": [1]}]
    c2 = [{"g": "SWAP", "q": [0, 1]}, {"g": "CZ", "q": [0, 1]}]
    target = json.dumps({"n": 2, "c1": c1, "v": "11", "c2": c2})
    table = stablearn.bell_table(target, conj=True)
    assert table["II"] == pytest.approx(0.25, abs=1e-12)
    assert table["XZ"] == pytest.approx(0.125, abs=1e-12)
    assert sum(table.values()) == pytest.approx(1.0, abs=1e-12)
    pr = stablearn.pauli_pr_plus(target, "ZX")
    assert pr == pytest.approx((2 + math.sqrt(2)) / 4, abs=1e-12)


def test_error_surface():
    with pytest.raises(stablearn.StablearnError):
        stablearn.statevector(json.dumps({"n": 1, "gates": [{"g": "Q", "q": [0]}]}))


def test_cli_pipeline():
    cli = os.environ.get("STABLEARN_CLI")
    if not cli:
        pytest.skip("STABLEARN_CLI not set")
    with tempfile.TemporaryDirectory() as tmp:
        target = os.path.join(tmp, "target.json")
        hyp = os.path.join(tmp, "hyp.json")
        report = os.path.join(tmp, "report.json")
        run = subprocess.run(
            [cli, "gen-target", "--kind", "tdepth1", "--n", "3", "--k", "1",
             "--seed", "9", "--out", target],
            capture_output=True, text=True)
        assert run.returncode == 0, run.stderr
        run = subprocess.run(
            [cli, "learn", "--target", target, "--algo", "tdepth1",
             "--seed", "21", "--out", hyp, "--report", report],
            capture_output=True, text=True)
        assert run.returncode == 0, run.stderr
        rep = json.load(open(report))
        assert rep["success"]
        assert rep["queries"]["total"] <= rep["queries"]["budget"]
        run = subprocess.run(
            [cli, "verify", "--target", target, "--hypothesis", hyp],
            capture_output=True, text=True)
        assert run.returncode == 0, run.stderr
