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

#include "cvdv/compiler.hpp"

namespace cvdv {

enum class QuadratureBasis { position, momentum };

struct HomodyneOutcome {
    double x = 0.0;           // lambda * (register value - (N-1)/2)
    std::uint64_t bits = 0;   // raw register bits
};

/// Position basis: Pauli-Z on the mode register (exact). Momentum basis: one
/// QFT first (error eps_F). Collapses the state.
HomodyneOutcome homodyne(StateVector& state, int mode, QuadratureBasis basis,
                         const GridSpec& grid, Rng& rng);

/// Repeated homodyne outcomes from a frozen state (no collapse).
std::vector<double> homodyne_samples(const StateVector& state, int mode, QuadratureBasis basis,
                                     const GridSpec& grid, Rng& rng, std::size_t shots);

/// Appends a vacuum ancilla mode, applies the compiled 50:50 beam splitter and
/// reads the positions of both registers; alpha = x_mode + i x_ancilla samples
/// the Husimi function. Both registers are consumed.
cplx heterodyne(StateVector& state, int mode, const GridSpec& grid, Rng& rng);

std::vector<cplx> heterodyne_samples(const StateVector& state, int mode, const GridSpec& grid,
                                     Rng& rng, std::size_t shots);

struct PhotonCount {
    int k = 0;
    int gamma = 0; // bits used
};

/// Photon counting by single-ancilla iterative phase estimation with modulus
/// 2^gamma, gamma = ceil(log2(Gamma+1)); exact on Fock states up to QFT error.
/// Needs one bare dv qubit (index `ancilla`); collapses the mode.
PhotonCount photon_count(StateVector& state, int mode, long gamma_cutoff, const GridSpec& grid,
                         Rng& rng, int ancilla = 0);

} // namespace cvdv
