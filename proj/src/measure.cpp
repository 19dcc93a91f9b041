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

#include "cvdv/measure.hpp"

#include <cmath>

namespace cvdv {

namespace {

std::vector<int> mode_qubits(const RegisterLayout& lay, int mode) {
    std::vector<int> qs(static_cast<std::size_t>(lay.qubits_per_mode));
    for (int r = 0; r < lay.qubits_per_mode; ++r) qs[static_cast<std::size_t>(r)] = lay.mode_qubit(mode, r);
    return qs;
}

double outcome_to_x(std::uint64_t v, const GridSpec& grid) {
    return grid.lambda * (static_cast<double>(v) - 0.5 * static_cast<double>(grid.N - 1));
}

/// state (x) vacuum ancilla mode appended after the existing modes, with the
/// compiled BS(pi/2) applied. Shared by the collapsing and sampling paths.
StateVector heterodyne_premeasure(const StateVector& state, int mode, const GridSpec& grid) {
    const RegisterLayout& lay = state.layout();
    RegisterLayout ext = lay;
    ext.modes += 1;
    ext.validate(); // throws when the ancilla mode exceeds the qubit budget
    if (mode < 0 || mode >= lay.modes) throw InvalidArgument("heterodyne: bad mode");

    auto vac = encode_fock(0, grid);
    {
        double nn = std::sqrt(norm2(vac));
        for (auto& z : vac) z /= nn;
    }
    StateVector out(ext);
    auto& dst = out.amplitudes();
    const auto& src = state.amplitudes();
    const int mn = lay.modes * lay.qubits_per_mode;
    const std::size_t mode_mask = grid.N - 1;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const std::size_t anc = (i >> mn) & mode_mask;       // new mode register
        const std::size_t low = i & ((std::size_t{1} << mn) - 1);
        const std::size_t high = i >> (mn + grid.n);          // dv qubits
        dst[i] = src[low | (high << mn)] * vac[anc];
    }
    auto bs = compile_beamsplitter(kPi / 2.0, grid, ext, mode, lay.modes);
    run_circuit(bs, out, grid);
    return out;
}

} // namespace

HomodyneOutcome homodyne(StateVector& state, int mode, QuadratureBasis basis,
                         const GridSpec& grid, Rng& rng) {
    if (basis == QuadratureBasis::momentum) state.apply_qft(mode, grid);
    auto res = state.measure_z(mode_qubits(state.layout(), mode), rng);
    return HomodyneOutcome{outcome_to_x(res.bits, grid), res.bits};
}

std::vector<double> homodyne_samples(const StateVector& state, int mode, QuadratureBasis basis,
                                     const GridSpec& grid, Rng& rng, std::size_t shots) {
    const StateVector* src = &state;
    StateVector rotated(state.layout());
    if (basis == QuadratureBasis::momentum) {
        rotated = state;
        rotated.apply_qft(mode, grid);
        src = &rotated;
    }
    auto raw = src->sample_z(mode_qubits(state.layout(), mode), rng, shots);
    std::vector<double> xs(shots);
    for (std::size_t i = 0; i < shots; ++i) xs[i] = outcome_to_x(raw[i], grid);
    return xs;
}

cplx heterodyne(StateVector& state, int mode, const GridSpec& grid, Rng& rng) {
    StateVector ext = heterodyne_premeasure(state, mode, grid);
    const int anc_mode = state.layout().modes;
    auto r1 = ext.measure_z(mode_qubits(ext.layout(), mode), rng);
    auto r2 = ext.measure_z(mode_qubits(ext.layout(), anc_mode), rng);
    const cplx alpha(outcome_to_x(r1.bits, grid), outcome_to_x(r2.bits, grid));
    // drop the collapsed ancilla register and hand the state back
    auto& dst = state.amplitudes();
    const auto& src = ext.amplitudes();
    const int mn = state.layout().modes * state.layout().qubits_per_mode;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        const std::size_t low = i & ((std::size_t{1} << mn) - 1);
        const std::size_t high = i >> mn;
        dst[i] = src[low | (r2.bits << mn) | (high << (mn + grid.n))];
    }
    state.normalize();
    return alpha;
}

std::vector<cplx> heterodyne_samples(const StateVector& state, int mode, const GridSpec& grid,
                                     Rng& rng, std::size_t shots) {
    StateVector ext = heterodyne_premeasure(state, mode, grid);
    const int anc_mode = state.layout().modes;
    auto q1 = mode_qubits(ext.layout(), mode);
    auto q2 = mode_qubits(ext.layout(), anc_mode);
    std::vector<int> both = q1;
    both.insert(both.end(), q2.begin(), q2.end());
    auto raw = ext.sample_z(both, rng, shots);
    std::vector<cplx> out(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        const std::uint64_t v1 = raw[i] & (grid.N - 1);
        const std::uint64_t v2 = raw[i] >> grid.n;
        out[i] = cplx(outcome_to_x(v1, grid), outcome_to_x(v2, grid));
    }
    return out;
}

PhotonCount photon_count(StateVector& state, int mode, long gamma_cutoff, const GridSpec& grid,
                         Rng& rng, int ancilla) {
    if (gamma_cutoff < 1) throw InvalidArgument("photon_count: cutoff must be >= 1");
    if (state.layout().dv_qubits < 1)
        throw InvalidArgument("photon_count: needs one bare ancilla qubit");
    const int anc = state.layout().dv_qubit(ancilla);
    const int gamma = static_cast<int>(std::ceil(std::log2(static_cast<double>(gamma_cutoff) + 1.0)));
    std::vector<int> bits;
    bool anc_is_one = false;
    for (int j = 0; j < gamma; ++j) {
        if (anc_is_one) state.apply_x(anc);
        state.apply_h(anc);
        // controlled power: e^{i phi Z n} = CR(-phi) . Rz(-phi on ancilla)
        const double phi = kPi / std::ldexp(1.0, j + 1);
        auto cr = compile_conditional_rotation(-phi, grid, state.layout(), mode, anc);
        run_circuit(cr, state, grid);
        state.apply_rz(anc, -phi);
        // feedback: |1> branch phase +pi sum_{l<j} b_l / 2^{j-l}
        double beta = 0.0;
        for (int l = 0; l < j; ++l)
            beta += kPi * static_cast<double>(bits[static_cast<std::size_t>(l)]) / std::ldexp(1.0, j - l);
        if (beta != 0.0) state.apply_phase_on_one(anc, beta);
        state.apply_h(anc);
        auto res = state.measure_z({anc}, rng);
        bits.push_back(static_cast<int>(res.bits & 1));
        anc_is_one = (res.bits & 1) != 0;
    }
    if (anc_is_one) state.apply_x(anc); // hand the ancilla back in |0>
    int k = 0;
    for (int j = 0; j < gamma; ++j) k |= bits[static_cast<std::size_t>(j)] << j;
    return PhotonCount{k, gamma};
}

} // namespace cvdv
