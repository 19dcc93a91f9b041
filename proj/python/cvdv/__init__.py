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

"""Position-encoded qubit simulation of hybrid oscillator-qubit circuits."""

from ._core import (
    EncodingError,
    GridSpec,
    InvalidArgument,
    advantage_boundary,
    compile_gate,
    encode_fock,
    fit_lemma1,
    fock_encoding_cost,
    gate_error,
    hermite_psi,
    parse_roundtrip,
    qft_error_fock,
    qft_error_sweep,
    qubits_for,
    shifted_qft_matrix,
    simulate,
)

__all__ = [
    "EncodingError",
    "GridSpec",
    "InvalidArgument",
    "advantage_boundary",
    "compile_gate",
    "encode_fock",
    "fit_lemma1",
    "fock_encoding_cost",
    "gate_error",
    "hermite_psi",
    "parse_roundtrip",
    "qft_error_fock",
    "qft_error_sweep",
    "qubits_for",
    "shifted_qft_matrix",
    "simulate",
]
