// Copyright 2025 The cvdvsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "cvdv/statevector.hpp"

namespace cvdv {

/// Algebraic description of one CV or hybrid gate.
struct HybridGate {
    enum class Kind {
        D, R, S, BS, CD, CR, CS, CBS,
        Fourier, Parity, CondParity, ModeSwap,
        PhaseQ, PhaseQQ, CondPhaseQ, CondPhaseQ2, CondPhaseQ1Q2
    };
    Kind kind;
    int mode = 0;
    int mode2 = -1;          // second mode for BS/CBS/PhaseQQ forms
    int control = -1;        // dv control qubit index for conditional kinds
    cplx alpha = 0.0;        // D/CD
    double param = 0.0;      // theta or r or t
    bool inverse = false;    // Fourier only
};

struct GateCounts {
    long qft = 0, h = 0, rz = 0, x = 0, cnot = 0, swap_ = 0, czrot = 0, diag = 0;
};

/// Ordered elementary-gate list plus the tracked global phase. QFT units stay
/// as markers; count_resources expands them with the per-unit costs
/// (n H, n(n-1)/2 Rz, n(n-1) CNOT), CzRot as 1 Rz + 2 CNOT and optionally
/// SWAP as 3 CNOT.
struct CompiledCircuit {
    std::vector<ElementaryGate> gates;
    double global_phase = 0.0;
    int qubits_per_mode = 0;

    GateCounts counts() const;
    long qft_count() const { return counts().qft; }
    void append(const CompiledCircuit& other);
    /// Remove adjacent F.F^-1 pairs on the same mode (zero-parameter elision).
    void elide_qft_pairs();
};

struct ResourceReport {
    GateCounts unit;       // QFT units kept whole, CzRot kept whole
    GateCounts expanded;   // QFT and CzRot expanded to {H, Rz, CNOT, ...}
    long expanded_cnot_swap3 = 0; // expanded CNOT total with SWAP = 3 CNOT
};

ResourceReport count_resources(const CompiledCircuit& circuit);

/// theta = theta0 + delta with theta0 on the family lattice (pi/2 Z for
/// rotations, pi Z for beam splitters), |delta| within the family bound,
/// ties broken toward the theta0 of smaller magnitude.
struct AngleSplit {
    double theta0 = 0.0;
    double delta = 0.0;
    long steps = 0; // theta0 / lattice step
};
enum class AngleFamily { rotation, beamsplitter };
AngleSplit split_angle(double theta, AngleFamily family);

/// Squeezing shear coefficients mu_1..mu_4 of r.
struct ShearCoefficients {
    double mu1, mu2, mu3, mu4;
};
ShearCoefficients shear_coefficients(double r);

// --- compilation to elementary gates ---------------------------------------
CompiledCircuit compile_displacement(cplx alpha, const GridSpec& grid,
                                     const RegisterLayout& layout, int mode);
CompiledCircuit compile_rotation(double theta, const GridSpec& grid,
                                 const RegisterLayout& layout, int mode);
CompiledCircuit compile_squeezing(double r, const GridSpec& grid,
                                  const RegisterLayout& layout, int mode);
CompiledCircuit compile_beamsplitter(double theta, const GridSpec& grid,
                                     const RegisterLayout& layout, int mode1, int mode2);

/// Conditional-displacement circuit forms: the conditional-parity sandwich of
/// the table row (2 QFT, 2n Rz, 2n CNOT) or one conditional Z-rotation per
/// qubit per leg (2 QFT, 2n CzRot; expands to 2n^2 + 2n CNOT).
enum class CdForm { sandwich, cz_legs };
CompiledCircuit compile_conditional_displacement(cplx alpha, const GridSpec& grid,
                                                 const RegisterLayout& layout, int mode,
                                                 int control, CdForm form = CdForm::sandwich);
CompiledCircuit compile_conditional_rotation(double theta, const GridSpec& grid,
                                             const RegisterLayout& layout, int mode, int control);
CompiledCircuit compile_conditional_squeezing(double r, const GridSpec& grid,
                                              const RegisterLayout& layout, int mode, int control);
CompiledCircuit compile_conditional_beamsplitter(double theta, const GridSpec& grid,
                                                 const RegisterLayout& layout, int mode1,
                                                 int mode2, int control);

/// Dispatcher over HybridGate (uses the default CD form).
CompiledCircuit compile_gate(const HybridGate& gate, const GridSpec& grid,
                             const RegisterLayout& layout);

/// Apply a compiled circuit (markers executed through the engine QFT) and the
/// tracked global phase.
void run_circuit(const CompiledCircuit& circuit, StateVector& state, const GridSpec& grid,
                 StateVector::QftPath path = StateVector::QftPath::circuit);

/// Expand QFT markers into executable elementary gates (shift DiagPhase
/// layers, H / CzRot ladder with local Rz corrections, bit-reversal swaps).
CompiledCircuit expand_qft_units(const CompiledCircuit& circuit, const GridSpec& grid,
                                 const RegisterLayout& layout);

// --- serialization -----------------------------------------------------------
std::string circuit_to_json(const CompiledCircuit& circuit);
std::string circuit_to_text(const CompiledCircuit& circuit);

const char* gate_kind_name(GateKind k);

} // namespace cvdv
