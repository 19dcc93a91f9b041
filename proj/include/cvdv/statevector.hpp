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

#include <cstdint>
#include <optional>

#include "cvdv/grid.hpp"
#include "cvdv/rng.hpp"
#include "cvdv/types.hpp"

namespace cvdv {

/// Qubit layout: m mode registers of n qubits each (LSB-first inside a mode,
/// qubit r of mode i sits at global position i*n + r with bit weight 2^r),
/// then a bare DV qubits above all modes.
struct RegisterLayout {
    int modes = 0;
    int qubits_per_mode = 0;
    int dv_qubits = 0;
    int max_qubits = 26;

    int total_qubits() const { return modes * qubits_per_mode + dv_qubits; }
    std::size_t dimension() const { return std::size_t{1} << total_qubits(); }
    int mode_qubit(int mode, int bit) const;
    int dv_qubit(int i) const;
    void validate() const;
};

enum class GateKind { H, Rz, X, CNOT, Swap, CzRot, DiagPhase, Qft, Mz };

/// One elementary gate. Rz(theta) = e^{i theta Z/2}; CzRot(theta) = e^{-i theta/2 Z(x)Z};
/// DiagPhase multiplies the amplitude of mode index j by e^{i angle j} (QFT shift
/// layers only); Qft is a unit marker expanded or executed as a whole.
struct ElementaryGate {
    GateKind kind = GateKind::X;
    int q0 = -1;
    int q1 = -1;
    double angle = 0.0;
    int mode = -1;
    bool inverse = false;
};

struct MeasureResult {
    std::uint64_t bits = 0;       // bit i = outcome of qubits[i]
    double probability = 0.0;
};

/// Dense statevector over all qubits of a layout. Unitary application is
/// in-place; a StateVector is exclusively owned while mutated.
class StateVector {
  public:
    explicit StateVector(RegisterLayout layout);

    static StateVector from_mode_vectors(const RegisterLayout& layout,
                                         const std::vector<std::vector<cplx>>& modes);

    const RegisterLayout& layout() const { return layout_; }
    std::vector<cplx>& amplitudes() { return amp_; }
    const std::vector<cplx>& amplitudes() const { return amp_; }

    double norm() const;
    void normalize();
    void scale(cplx z);
    /// Multiply the whole state by e^{i phi}.
    void phase(double phi) { scale(std::polar(1.0, phi)); }

    // -- elementary gates ---------------------------------------------------
    void apply_h(int q);
    void apply_x(int q);
    void apply_rz(int q, double theta);          // e^{i theta Z/2}
    void apply_cnot(int control, int target);
    void apply_swap(int a, int b);
    void apply_czrot(int a, int b, double theta); // e^{-i theta/2 ZZ}
    void apply_cphase(int a, int b, double theta); // diag(1,1,1,e^{i theta})
    void apply_phase_on_one(int q, double phi);    // |1> branch gets e^{i phi}
    void apply_diag_phase(int mode, double angle); // amp[j] *= e^{i angle j_mode}
    void apply_gate(const ElementaryGate& g, const GridSpec& grid);

    // -- mode-level operations ----------------------------------------------
    /// e^{it q}: n Rz gates (exact on position encoding).
    void apply_phase_q(int mode, double t, const GridSpec& grid);
    /// e^{it q_j q_k} (n^2 CzRot) or e^{it q^2} (n(n-1)/2 CzRot + tracked phase).
    void apply_phase_qq(int mode_j, int mode_k, double t, const GridSpec& grid);
    enum class CondForm { Zq, Zq2, Zq1q2 };
    /// Conditional forms e^{it Z q}, e^{it Z q^2}, e^{it Z q1 q2}.
    void apply_cond_phase(int control, int mode_j, int mode_k, double t, CondForm form,
                          const GridSpec& grid);
    /// Shifted QFT on one mode register; circuit and dense paths agree to 1e-10.
    enum class QftPath { circuit, dense };
    void apply_qft(int mode, const GridSpec& grid, bool inverse = false,
                   QftPath path = QftPath::circuit);
    void apply_parity(int mode);
    void apply_cond_parity(int control, int mode);
    void apply_mode_swap(int mode_a, int mode_b);

    // -- measurement ----------------------------------------------------------
    /// Born-rule sample of the listed qubits; collapses and renormalizes.
    MeasureResult measure_z(const std::vector<int>& qubits, Rng& rng);
    /// Outcome distribution of the listed qubits (no collapse).
    std::vector<double> outcome_distribution(const std::vector<int>& qubits) const;
    /// Repeated Born samples from the current state (no collapse).
    std::vector<std::uint64_t> sample_z(const std::vector<int>& qubits, Rng& rng,
                                        std::size_t shots) const;

    /// Value of mode register `mode` inside the global index `idx`.
    std::size_t mode_value(std::size_t idx, int mode) const;

  private:
    void check_qubit(int q) const;
    RegisterLayout layout_;
    std::vector<cplx> amp_;
};

} // namespace cvdv
