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

#include <memory>

#include <Eigen/Dense>

#include "cvdv/compiler.hpp"
#include "cvdv/grid.hpp"

namespace cvdv {

using Vec = Eigen::VectorXcd;

/// Fock coefficients of a one- or two-mode state, optionally with one control
/// qubit. Layout follows the engine: index = k0 + D*k1 (+ branch*D^modes for
/// the control bit, |0> branch first).
struct FockState {
    Vec c;
    int dim = 0;       // per-mode cutoff D
    int modes = 1;
    bool conditional = false;
    bool truncation_flag = false; // set when support crept too close to the cutoff

    static FockState single(int dim, int k);
    static FockState single_coeffs(Vec coeffs);
    static FockState two_mode(int dim, int k0, int k1);
    /// Attach a control qubit in (c0|0> + c1|1>).
    FockState with_control(cplx c0, cplx c1) const;

    std::size_t size() const { return static_cast<std::size_t>(c.size()); }
    double norm() const { return c.norm(); }
    /// Norm-squared occupancy of the top `fraction` of levels (per mode).
    double top_occupancy(double fraction = 0.2) const;
    /// Marginal photon-number distribution of one mode (branches summed).
    std::vector<double> mode_distribution(int mode) const;
    /// Project onto a control-qubit value; returns the (unnormalized) mode part.
    FockState project_control(int bit) const;
};

/// Exact CV dynamics in a truncated Fock basis: ladder-operator generators,
/// exponentials by Hermitian eigendecomposition (single mode), per-photon-number
/// sector eigendecomposition (beam splitters), and Lanczos exponentials for the
/// non-number-conserving two-mode shears.
class FockOracle {
  public:
    explicit FockOracle(int cutoff = 256);

    int cutoff() const { return dim_; }
    const Eigen::MatrixXcd& a() const { return a_; }
    const Eigen::MatrixXcd& adag() const { return ad_; }

    /// Apply a hybrid gate. Conditional gates need state.conditional == true.
    FockState apply(const HybridGate& gate, const FockState& in) const;

    // Single-mode factor applications (exact, reused by intermediates).
    Vec exp_q(double t, const Vec& v) const;   // e^{i t q}
    Vec exp_p(double t, const Vec& v) const;   // e^{i t p}
    Vec exp_q2(double t, const Vec& v) const;  // e^{i t q^2}
    Vec exp_p2(double t, const Vec& v) const;  // e^{i t p^2}
    Vec displacement(cplx alpha, const Vec& v) const;
    Vec rotation(double theta, const Vec& v) const; // e^{-i theta (n + 1/2)}
    Vec squeezing(double r, const Vec& v) const;
    Vec number_phase(double phi, const Vec& v) const; // e^{i phi n}

    // Two-mode (length dim^2, index k0 + D*k1; gate acts on the two modes).
    Vec beamsplitter(double theta, const Vec& v) const;
    Vec exp_q1q2(double t, const Vec& v) const; // Lanczos
    Vec exp_p1p2(double t, const Vec& v) const;
    Vec swap_modes(const Vec& v) const;

    /// Coherent-state coefficients e^{-|a|^2/2} a^k / sqrt(k!).
    static Vec coherent_coeffs(cplx alpha, int dim);

    /// Enc of a Fock-coefficient state on the grid (one or two modes).
    std::vector<cplx> reference_wavefunction(const FockState& state, const GridSpec& grid) const;

  private:
    struct EigSys {
        Eigen::MatrixXcd vecs;
        Eigen::VectorXd vals;
    };
    const EigSys& sys_q() const;
    const EigSys& sys_p() const;
    const EigSys& sys_q2() const;
    const EigSys& sys_p2() const;
    const EigSys& sys_sq() const; // (qp+pq)/2 eigensystem for squeezing
    Vec apply_exp(const EigSys& s, double scale, const Vec& v) const;
    Vec lanczos_exp(double t, const Vec& v, char which) const;

    int dim_;
    Eigen::MatrixXcd a_, ad_;
    mutable std::unique_ptr<EigSys> q_, p_, q2_, p2_, sq_;
};

} // namespace cvdv
