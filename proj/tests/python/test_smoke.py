# Copyright 2025 The cvdvsim developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import cvdv


def test_grid():
    g = cvdv.GridSpec(6)
    assert g.N == 64
    assert g.lam * g.lam * g.N == pytest.approx(2 * math.pi, rel=1e-14)
    assert g.position(0) == pytest.approx(-g.lam * 31.5)


def test_hermite_and_encoding():
    assert cvdv.hermite_psi(0, 0.0) == pytest.approx(math.pi ** -0.25, rel=1e-13)
    g = cvdv.GridSpec(6)
    enc = cvdv.encode_fock(0, g)
    assert sum(abs(z) ** 2 for z in enc) == pytest.approx(1.0, abs=1e-10)


def test_qft_error_and_fit():
    g = cvdv.GridSpec(5)
    eps = cvdv.qft_error_fock(8, g)
    assert eps == pytest.approx(1.393485164375e-06, rel=1e-9)
    pts = cvdv.qft_error_sweep([5], 30)
    fit = cvdv.fit_lemma1([(p["n"], p["k"], p["eps"]) for p in pts])
    a5, _ = fit["per_n"][5]
    assert 0.7 < a5 < 1.1


def test_compile_counts():
    counts = cvdv.compile_gate("D", 7, alpha=2 + 1j)
    assert counts["unit"]["qft"] == 2
    assert counts["unit"]["rz"] == 14
    assert counts["expanded"]["cnot"] == 84
    cd = cvdv.compile_gate("CD", 7, alpha=0.3 - 0.2j, cd_form="cz-legs")
    assert cd["expanded"]["cnot"] == 2 * 49 + 14


def test_resource_estimate():
    assert cvdv.qubits_for(10, 1e-6) == 6
    assert cvdv.advantage_boundary(6) == 84


def test_gate_error_small():
    err = cvdv.gate_error("R", 6, param=math.pi / 4, k=1)
    assert 0 <= err < 1e-3


def test_simulate_deterministic():
    prog = "mode m=1 n=5\nqubit a=1\nseed 9\nprep fock 0 1\nMEAS photon 0 gamma=2\n"
    r1 = cvdv.simulate(prog, shots=5)
    r2 = cvdv.simulate(prog, shots=5)
    assert r1 == r2
    assert all('"photon"' in line for line in r1)
    assert all('"outcome":1' in line for line in r1)


def test_parse_errors_are_structured():
    with pytest.raises(RuntimeError):
        cvdv.simulate("mode m=2 n=4\nBS 0 0 1.0\n")


def test_roundtrip():
    text = "mode m=2 n=4\nqubit a=1\nD 0 1+0.5i\nCR q0 m0 0.5\nMEAS homodyne 0 q\n"
    printed = cvdv.parse_roundtrip(text)
    assert cvdv.parse_roundtrip(printed) == printed
