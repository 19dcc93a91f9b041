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

#include <map>
#include <optional>

#include "cvdv/oracle.hpp"

namespace cvdv {

/// || Enc_P(psi) - F Enc_Q(psi) ||, unnormalized encodings.
double qft_error(const Wavefunction& position, const Wavefunction& momentum,
                 const GridSpec& grid);
/// Same for the Fock state |k> (momentum wavefunction is (-i)^k psi_k).
double qft_error_fock(int k, const GridSpec& grid);

struct QftErrorPoint {
    int n;
    int k;
    double eps;
};

/// Per-Fock sweep. kmax < 0 sweeps adaptively until eps clears the fit window
/// top (with margin) or the safety cap is hit.
std::vector<QftErrorPoint> qft_error_sweep(const std::vector<int>& ns, int kmax = -1);

/// Per-n line fit of log eps vs k. `window_anchored` draws the exponential
/// through the first and last points inside the window (the protocol that
/// reproduces the published coefficients); `least_squares` is ordinary LS over
/// all in-window points.
enum class FitMethod { window_anchored, least_squares };

struct ErrorFit {
    std::map<int, std::pair<double, double>> per_n; // n -> (a_n, b_n)
    double c1 = 0, c2 = 0, c3 = 0, c4 = 0;          // a_n ~ c1 2^{-n/2} + c2, b_n ~ c3 2^{n/2} + c4
    double win_lo = 3e-7, win_hi = 1e-1;
    FitMethod method = FitMethod::window_anchored;
    std::vector<int> skipped;                        // n with fewer than 3 usable points
};

inline constexpr double kFpFloor = 1e-12; // below this, eps is fp noise and excluded

ErrorFit fit_per_fock(const std::vector<QftErrorPoint>& points, double win_lo = 3e-7,
                      double win_hi = 1e-1, FitMethod method = FitMethod::window_anchored);

/// e^{a k + b}.
double lemma_eps(double a, double b, int k);

/// General-state bound sqrt( sum_k p_k e^{2 a k + 2 b} ); may exceed 1.
double general_state_bound(double a_n, double b_n, const std::vector<double>& fock_probs);

/// Reference meta coefficients of the per-Fock error model
/// (a_n = C1 2^{-n/2} + C2, b_n = C3 2^{n/2} + C4).
inline constexpr double kRefC1 = 4.2125, kRefC2 = 0.1027, kRefC3 = -5.7903,
                        kRefC4 = 16.2724;

/// Smallest n with n >= 2 log2((C + sqrt(C^2 + 97.60 Gamma))/11.5806),
/// C = 0.1027 Gamma + 16.2724 + ln(1/eps).
int qubits_for(long gamma, double eps);

/// Largest Fock cutoff reaching error eps at register size n (negative when
/// infeasible), from the reference per-Fock error model.
long gamma_for(int n, double eps);

struct FockCost {
    double n_cnot;
    double n_exp;
};
/// Printed Fock-basis-encoding baselines (comparison formulas only).
FockCost fock_encoding_cost(int n, int n_newton, double alpha, double eps, int trotter_halforder);

/// CNOT budget ratio tau_hybrid/tau_qubit = 2n^2 + 2n.
double advantage_boundary(int n);

/// || reference - state || with optional global-phase alignment on the
/// largest-magnitude reference amplitude.
double state_distance(const std::vector<cplx>& reference, const std::vector<cplx>& out,
                      bool align_phase = true, double* phase_correction = nullptr);

/// Gate discretization error of a compiled gate on Fock input |k> (single
/// mode) or |k,0> (two-mode gates), against the oracle reference.
double gate_error_fock(const HybridGate& gate, int k, const GridSpec& grid,
                       const FockOracle& oracle);

/// Marginal Fock distributions of every intermediate state a QFT acts on in
/// the gate's decomposition (inputs single-mode |k> coeffs or two-mode).
std::vector<std::vector<double>> qft_intermediate_distributions(const HybridGate& gate,
                                                                const FockState& input,
                                                                const FockOracle& oracle);

// --- CSV emitters ------------------------------------------------------------
std::string qft_error_csv(const std::vector<QftErrorPoint>& pts);
struct GateErrorPoint {
    std::string gate;
    int n;
    int k;
    double eps;
};
std::string gate_error_csv(const std::vector<GateErrorPoint>& pts);
std::string advantage_csv(int nmax, double eps);

} // namespace cvdv
