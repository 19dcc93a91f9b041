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

#include "cvdv/statevector.hpp"

#include <algorithm>
#include <cmath>

namespace cvdv {

int RegisterLayout::mode_qubit(int mode, int bit) const {
    if (mode < 0 || mode >= modes || bit < 0 || bit >= qubits_per_mode)
        throw InvalidArgument("mode_qubit: index out of range");
    return mode * qubits_per_mode + bit;
}

int RegisterLayout::dv_qubit(int i) const {
    if (i < 0 || i >= dv_qubits) throw InvalidArgument("dv_qubit: index out of range");
    return modes * qubits_per_mode + i;
}

void RegisterLayout::validate() const {
    if (modes < 0 || qubits_per_mode < 0 || dv_qubits < 0)
        throw InvalidArgument("RegisterLayout: negative field");
    if (modes > 0 && qubits_per_mode < 1)
        throw InvalidArgument("RegisterLayout: modes need at least one qubit each");
    if (total_qubits() < 1) throw InvalidArgument("RegisterLayout: empty register");
    if (total_qubits() > max_qubits)
        throw InvalidArgument("RegisterLayout: " + std::to_string(total_qubits()) +
                              " qubits exceed the configured maximum " + std::to_string(max_qubits));
}

StateVector::StateVector(RegisterLayout layout) : layout_(layout) {
    layout_.validate();
    amp_.assign(layout_.dimension(), cplx(0.0));
    amp_[0] = 1.0;
}

StateVector StateVector::from_mode_vectors(const RegisterLayout& layout,
                                           const std::vector<std::vector<cplx>>& modes) {
    StateVector sv(layout);
    if (static_cast<int>(modes.size()) != layout.modes)
        throw InvalidArgument("from_mode_vectors: mode count mismatch");
    const std::size_t N = std::size_t{1} << layout.qubits_per_mode;
    for (const auto& v : modes)
        if (v.size() != N) throw InvalidArgument("from_mode_vectors: mode vector size mismatch");
    for (std::size_t idx = 0; idx < sv.amp_.size(); ++idx) {
        if ((idx >> (layout.modes * layout.qubits_per_mode)) != 0) {
            sv.amp_[idx] = 0.0; // dv qubits start in |0>
            continue;
        }
        cplx a = 1.0;
        for (int m = 0; m < layout.modes; ++m) a *= modes[m][sv.mode_value(idx, m)];
        sv.amp_[idx] = a;
    }
    if (sv.amp_.empty() || norm2(sv.amp_) == 0.0)
        throw EncodingError("from_mode_vectors: zero state");
    return sv;
}

std::size_t StateVector::mode_value(std::size_t idx, int mode) const {
    const int n = layout_.qubits_per_mode;
    return (idx >> (mode * n)) & ((std::size_t{1} << n) - 1);
}

double StateVector::norm() const { return std::sqrt(norm2(amp_)); }

void StateVector::normalize() {
    const double nn = norm();
    if (nn == 0.0) throw EncodingError("normalize: zero-norm state");
    scale(1.0 / nn);
}

void StateVector::scale(cplx z) {
    for (auto& a : amp_) a *= z;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= layout_.total_qubits()) throw InvalidArgument("qubit index out of range");
}

void StateVector::apply_h(int q) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        const cplx a0 = amp_[i], a1 = amp_[i | bit];
        amp_[i] = s * (a0 + a1);
        amp_[i | bit] = s * (a0 - a1);
    }
}

void StateVector::apply_x(int q) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
}

void StateVector::apply_rz(int q, double theta) {
    check_qubit(q);
    if (!std::isfinite(theta)) throw InvalidArgument("apply_rz: non-finite angle");
    const std::size_t bit = std::size_t{1} << q;
    const cplx p0 = std::polar(1.0, theta / 2.0), p1 = std::conj(p0);
    for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] *= (i & bit) ? p1 : p0;
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw InvalidArgument("apply_cnot: identical operands");
    const std::size_t cb = std::size_t{1} << control, tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
}

void StateVector::apply_swap(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) return;
    const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & ab) && !(i & bb)) std::swap(amp_[i], amp_[(i & ~ab) | bb]);
}

void StateVector::apply_czrot(int a, int b, double theta) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw InvalidArgument("apply_czrot: identical operands");
    if (!std::isfinite(theta)) throw InvalidArgument("apply_czrot: non-finite angle");
    const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    const cplx even = std::polar(1.0, -theta / 2.0), odd = std::conj(even);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        const bool z = ((i & ab) != 0) != ((i & bb) != 0);
        amp_[i] *= z ? odd : even;
    }
}

void StateVector::apply_cphase(int a, int b, double theta) {
    check_qubit(a);
    check_qubit(b);
    const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    const cplx ph = std::polar(1.0, theta);
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & ab) && (i & bb)) amp_[i] *= ph;
}

void StateVector::apply_phase_on_one(int q, double phi) {
    check_qubit(q);
    const std::size_t bit = std::size_t{1} << q;
    const cplx ph = std::polar(1.0, phi);
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if (i & bit) amp_[i] *= ph;
}

void StateVector::apply_diag_phase(int mode, double angle) {
    for (std::size_t i = 0; i < amp_.size(); ++i)
        amp_[i] *= std::polar(1.0, angle * static_cast<double>(mode_value(i, mode)));
}

void StateVector::apply_gate(const ElementaryGate& g, const GridSpec& grid) {
    switch (g.kind) {
        case GateKind::H: apply_h(g.q0); break;
        case GateKind::Rz: apply_rz(g.q0, g.angle); break;
        case GateKind::X: apply_x(g.q0); break;
        case GateKind::CNOT: apply_cnot(g.q0, g.q1); break;
        case GateKind::Swap: apply_swap(g.q0, g.q1); break;
        case GateKind::CzRot: apply_czrot(g.q0, g.q1, g.angle); break;
        case GateKind::DiagPhase: apply_diag_phase(g.mode, g.angle); break;
        case GateKind::Qft: apply_qft(g.mode, grid, g.inverse); break;
        case GateKind::Mz: throw InvalidArgument("Mz gates are applied through measure_z");
    }
}

void StateVector::apply_phase_q(int mode, double t, const GridSpec& grid) {
    if (!std::isfinite(t)) throw InvalidArgument("apply_phase_q: non-finite parameter");
    for (int r = 0; r < layout_.qubits_per_mode; ++r)
        apply_rz(layout_.mode_qubit(mode, r), -t * grid.lambda * std::ldexp(1.0, r));
}

void StateVector::apply_phase_qq(int mode_j, int mode_k, double t, const GridSpec& grid) {
    if (!std::isfinite(t)) throw InvalidArgument("apply_phase_qq: non-finite parameter");
    const double lam2 = grid.lambda * grid.lambda;
    const int n = layout_.qubits_per_mode;
    if (mode_j == mode_k) {
        const double NN = static_cast<double>(grid.N) * static_cast<double>(grid.N);
        phase(t * lam2 * (NN - 1.0) / 12.0);
        for (int r = 0; r < n; ++r)
            for (int s = r + 1; s < n; ++s)
                apply_czrot(layout_.mode_qubit(mode_j, r), layout_.mode_qubit(mode_j, s),
                            -t * lam2 * std::ldexp(1.0, r + s));
    } else {
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                apply_czrot(layout_.mode_qubit(mode_j, r), layout_.mode_qubit(mode_k, s),
                            -t * lam2 * std::ldexp(1.0, r + s - 1));
    }
}

void StateVector::apply_cond_phase(int control, int mode_j, int mode_k, double t, CondForm form,
                                   const GridSpec& grid) {
    if (!std::isfinite(t)) throw InvalidArgument("apply_cond_phase: non-finite parameter");
    const double lam2 = grid.lambda * grid.lambda;
    const int n = layout_.qubits_per_mode;
    switch (form) {
        case CondForm::Zq:
            for (int r = 0; r < n; ++r)
                apply_czrot(control, layout_.mode_qubit(mode_j, r),
                            t * grid.lambda * std::ldexp(1.0, r));
            break;
        case CondForm::Zq2: {
            const double NN = static_cast<double>(grid.N) * static_cast<double>(grid.N);
            apply_rz(control, t * lam2 * (NN - 1.0) / 6.0);
            for (int r = 0; r < n; ++r) {
                apply_cnot(control, layout_.mode_qubit(mode_j, r));
                for (int s = r + 1; s < n; ++s)
                    apply_czrot(layout_.mode_qubit(mode_j, r), layout_.mode_qubit(mode_j, s),
                                -t * lam2 * std::ldexp(1.0, r + s));
                apply_cnot(control, layout_.mode_qubit(mode_j, r));
            }
            break;
        }
        case CondForm::Zq1q2:
            for (int r = 0; r < n; ++r) {
                apply_cnot(control, layout_.mode_qubit(mode_j, r));
                for (int s = 0; s < n; ++s)
                    apply_czrot(layout_.mode_qubit(mode_j, r), layout_.mode_qubit(mode_k, s),
                                -t * lam2 * std::ldexp(1.0, r + s - 1));
                apply_cnot(control, layout_.mode_qubit(mode_j, r));
            }
            break;
    }
}

void StateVector::apply_qft(int mode, const GridSpec& grid, bool inverse, QftPath path) {
    if (grid.n != layout_.qubits_per_mode)
        throw InvalidArgument("apply_qft: grid does not match layout");
    if (mode < 0 || mode >= layout_.modes) throw InvalidArgument("apply_qft: bad mode");
    const int n = grid.n;
    const std::size_t N = grid.N;
    if (path == QftPath::dense) {
        // gather each register slice, multiply by the dense matrix
        const std::size_t stride = std::size_t{1} << (mode * n);
        const std::size_t dim = amp_.size();
        std::vector<cplx> slice(N);
        for (std::size_t base = 0; base < dim; ++base) {
            if (mode_value(base, mode) != 0) continue;
            for (std::size_t v = 0; v < N; ++v) slice[v] = amp_[base + v * stride];
            auto out = apply_shifted_qft_dense(slice, grid, inverse);
            for (std::size_t v = 0; v < N; ++v) amp_[base + v * stride] = out[v];
        }
        return;
    }
    // Circuit path:  F = e^{-i 2 pi c^2/N} . Dc . W . Dc,   c = (N-1)/2,
    // Dc = diag(e^{i 2 pi c j / N}),  W|j> = (1/sqrt N) sum_k e^{-2 pi i jk/N}|k>.
    const double c = 0.5 * static_cast<double>(N - 1);
    const double shift = 2.0 * kPi * c / static_cast<double>(N);
    const double sgn = inverse ? -1.0 : 1.0;
    auto q = [&](int r) { return layout_.mode_qubit(mode, r); };
    auto dc_layer = [&] { apply_diag_phase(mode, sgn * shift); };
    auto w_layer = [&] {
        // W with bit weight 2^r on qubit r: Hadamard ladder with controlled
        // phases e^{-2 pi i / 2^m}, then bit reversal. Inverse runs conjugated
        // and in reverse order.
        if (!inverse) {
            for (int j = n - 1; j >= 0; --j) {
                apply_h(q(j));
                for (int m = j - 1; m >= 0; --m)
                    apply_cphase(q(m), q(j), -2.0 * kPi / std::ldexp(1.0, j - m + 1));
            }
            for (int r = 0; r < n / 2; ++r) apply_swap(q(r), q(n - 1 - r));
        } else {
            for (int r = 0; r < n / 2; ++r) apply_swap(q(r), q(n - 1 - r));
            for (int j = 0; j < n; ++j) {
                for (int m = 0; m < j; ++m)
                    apply_cphase(q(m), q(j), 2.0 * kPi / std::ldexp(1.0, j - m + 1));
                apply_h(q(j));
            }
        }
    };
    dc_layer();
    w_layer();
    dc_layer();
    phase(-sgn * 2.0 * kPi * c * c / static_cast<double>(N));
}

void StateVector::apply_parity(int mode) {
    for (int r = 0; r < layout_.qubits_per_mode; ++r) apply_x(layout_.mode_qubit(mode, r));
}

void StateVector::apply_cond_parity(int control, int mode) {
    for (int r = 0; r < layout_.qubits_per_mode; ++r)
        apply_cnot(control, layout_.mode_qubit(mode, r));
}

void StateVector::apply_mode_swap(int mode_a, int mode_b) {
    if (mode_a == mode_b) return;
    for (int r = 0; r < layout_.qubits_per_mode; ++r)
        apply_swap(layout_.mode_qubit(mode_a, r), layout_.mode_qubit(mode_b, r));
}

std::vector<double> StateVector::outcome_distribution(const std::vector<int>& qubits) const {
    for (int q : qubits) check_qubit(q);
    if (qubits.size() > 30) throw InvalidArgument("outcome_distribution: too many qubits");
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        const double w = std::norm(amp_[i]);
        if (w == 0.0) continue;
        std::size_t key = 0;
        for (std::size_t b = 0; b < qubits.size(); ++b)
            if (i & (std::size_t{1} << qubits[b])) key |= std::size_t{1} << b;
        probs[key] += w;
    }
    return probs;
}

MeasureResult StateVector::measure_z(const std::vector<int>& qubits, Rng& rng) {
    const double total = norm2(amp_);
    if (total <= 0.0) throw EncodingError("measure_z: zero-norm state");
    auto probs = outcome_distribution(qubits);
    double u = rng.uniform() * total;
    std::size_t outcome = probs.size() - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        if (u < acc) {
            outcome = k;
            break;
        }
    }
    // collapse
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        std::size_t key = 0;
        for (std::size_t b = 0; b < qubits.size(); ++b)
            if (i & (std::size_t{1} << qubits[b])) key |= std::size_t{1} << b;
        if (key != outcome) amp_[i] = 0.0;
    }
    normalize();
    return MeasureResult{outcome, probs[outcome] / total};
}

std::vector<std::uint64_t> StateVector::sample_z(const std::vector<int>& qubits, Rng& rng,
                                                 std::size_t shots) const {
    auto probs = outcome_distribution(qubits);
    const double total = norm2(amp_);
    std::vector<std::uint64_t> out(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        double u = rng.uniform() * total;
        double acc = 0.0;
        std::size_t outcome = probs.size() - 1;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            acc += probs[k];
            if (u < acc) {
                outcome = k;
                break;
            }
        }
        out[s] = outcome;
    }
    return out;
}

} // namespace cvdv
