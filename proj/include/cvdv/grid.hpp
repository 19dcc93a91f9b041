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

#include <cstddef>
#include <functional>

#include "cvdv/types.hpp"

namespace cvdv {

/// Discretization of one bosonic mode: n qubits, N = 2^n grid points with
/// spacing lambda = sqrt(2*pi/N). Grid positions are lambda*(j - (N-1)/2),
/// so for even N there is no q = 0 sample; always go through position().
struct GridSpec {
    int n = 0;
    std::size_t N = 0;
    double lambda = 0.0;

    static GridSpec make(int qubits);

    /// lambda * (j - (N-1)/2); throws on out-of-range j.
    double position(std::size_t j) const;

    /// Shifted index j - (N-1)/2 (half-integral for even N).
    double shifted_index(std::size_t j) const;
};

/// A continuous wavefunction to be sampled on the grid. `basis` records
/// whether the evaluator is the position or the momentum representation.
struct Wavefunction {
    enum class Basis { position, momentum };
    std::function<cplx(double)> eval;
    Basis basis = Basis::position;
};

/// Harmonic-oscillator eigenfunction psi_k(x), evaluated by the normalized
/// three-term recurrence with exponent rescaling, so the seed e^{-x^2/2}
/// may underflow a double without corrupting high-k values.
double hermite_psi(int k, double x);

/// psi_0..psi_kmax at one point; out must have kmax+1 slots.
void hermite_column(int kmax, double x, double* out);

/// Fock-state wavefunctions in the two bases (momentum picks up (-i)^k).
Wavefunction fock_wavefunction(int k, Wavefunction::Basis basis = Wavefunction::Basis::position);

/// Coherent state D(alpha)|0>: pi^{-1/4} exp(i sqrt2 Im(a) q - (q - sqrt2 Re(a))^2/2 - i Im(a)Re(a)).
Wavefunction coherent_wavefunction(cplx alpha);

/// Enc(psi): entry j is sqrt(lambda) * psi(lambda*(j-(N-1)/2)). Not renormalized;
/// the norm deficit 1 - |Enc|^2 is a diagnostic. Throws EncodingError on a
/// non-finite sample.
std::vector<cplx> encode(const Wavefunction& wf, const GridSpec& grid);

/// Fast path: encode the Fock state |k> (position samples).
std::vector<cplx> encode_fock(int k, const GridSpec& grid);

/// 1 - |Enc|^2, the discretization norm deficit.
double norm_deficit(const std::vector<cplx>& enc);

/// Dense shifted QFT, row-major N x N: F[k][j] = exp(-i lambda^2 jt*kt)/sqrt(N).
/// This matrix is the definitional object every circuit-level QFT must match.
std::vector<cplx> shifted_qft_matrix(const GridSpec& grid);

/// y = F v (or F^dagger v). Dense reference path.
std::vector<cplx> apply_shifted_qft_dense(const std::vector<cplx>& v, const GridSpec& grid,
                                          bool inverse = false);

} // namespace cvdv
