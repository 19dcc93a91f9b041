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

#include "cvdv/compiler.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace cvdv {

namespace {

ElementaryGate g1(GateKind k, int q, double angle = 0.0) {
    ElementaryGate g;
    g.kind = k;
    g.q0 = q;
    g.angle = angle;
    return g;
}

ElementaryGate g2(GateKind k, int a, int b, double angle = 0.0) {
    ElementaryGate g;
    g.kind = k;
    g.q0 = a;
    g.q1 = b;
    g.angle = angle;
    return g;
}

ElementaryGate qft_marker(int mode, bool inverse) {
    ElementaryGate g;
    g.kind = GateKind::Qft;
    g.mode = mode;
    g.inverse = inverse;
    return g;
}

ElementaryGate diag_gate(int mode, double angle) {
    ElementaryGate g;
    g.kind = GateKind::DiagPhase;
    g.mode = mode;
    g.angle = angle;
    return g;
}

struct Emitter {
    CompiledCircuit& c;
    const GridSpec& grid;
    const RegisterLayout& lay;

    void rz_layer(int mode, double t) {
        // e^{i t q}: one Rz per qubit, Rz(-t lambda 2^r)
        for (int r = 0; r < grid.n; ++r)
            c.gates.push_back(g1(GateKind::Rz, lay.mode_qubit(mode, r),
                                 -t * grid.lambda * std::ldexp(1.0, r)));
    }

    void shear(int mode, double t) {
        // e^{i t q^2}: n(n-1)/2 CzRot plus the tracked constant phase
        if (t == 0.0) return;
        const double lam2 = grid.lambda * grid.lambda;
        const double NN = static_cast<double>(grid.N) * static_cast<double>(grid.N);
        c.global_phase += t * lam2 * (NN - 1.0) / 12.0;
        for (int r = 0; r < grid.n; ++r)
            for (int s = r + 1; s < grid.n; ++s)
                c.gates.push_back(g2(GateKind::CzRot, lay.mode_qubit(mode, r),
                                     lay.mode_qubit(mode, s), -t * lam2 * std::ldexp(1.0, r + s)));
    }

    void cross_shear(int m1, int m2, double t) {
        // e^{i t q1 q2}: n^2 CzRot, no constant term
        if (t == 0.0) return;
        const double lam2 = grid.lambda * grid.lambda;
        for (int r = 0; r < grid.n; ++r)
            for (int s = 0; s < grid.n; ++s)
                c.gates.push_back(g2(GateKind::CzRot, lay.mode_qubit(m1, r),
                                     lay.mode_qubit(m2, s),
                                     -t * lam2 * std::ldexp(1.0, r + s - 1)));
    }

    // e^{i t Z q^2}; the constant term becomes an Rz on the control,
    // returned in accumulated form so the caller can fuse one Rz.
    void cond_shear(int control, int mode, double t, double& control_rz) {
        const double lam2 = grid.lambda * grid.lambda;
        const double NN = static_cast<double>(grid.N) * static_cast<double>(grid.N);
        control_rz += t * lam2 * (NN - 1.0) / 6.0;
        for (int r = 0; r < grid.n; ++r) {
            c.gates.push_back(g2(GateKind::CNOT, control, lay.mode_qubit(mode, r)));
            for (int s = r + 1; s < grid.n; ++s)
                c.gates.push_back(g2(GateKind::CzRot, lay.mode_qubit(mode, r),
                                     lay.mode_qubit(mode, s), -t * lam2 * std::ldexp(1.0, r + s)));
            c.gates.push_back(g2(GateKind::CNOT, control, lay.mode_qubit(mode, r)));
        }
    }

    void cond_cross_shear(int control, int m1, int m2, double t) {
        const double lam2 = grid.lambda * grid.lambda;
        for (int r = 0; r < grid.n; ++r) {
            c.gates.push_back(g2(GateKind::CNOT, control, lay.mode_qubit(m1, r)));
            for (int s = 0; s < grid.n; ++s)
                c.gates.push_back(g2(GateKind::CzRot, lay.mode_qubit(m1, r),
                                     lay.mode_qubit(m2, s),
                                     -t * lam2 * std::ldexp(1.0, r + s - 1)));
            c.gates.push_back(g2(GateKind::CNOT, control, lay.mode_qubit(m1, r)));
        }
    }

    void cond_rz_layer(int control, int mode, double t) {
        // e^{i t Z q}: one CzRot(control, qubit) per qubit
        for (int r = 0; r < grid.n; ++r)
            c.gates.push_back(g2(GateKind::CzRot, control, lay.mode_qubit(mode, r),
                                 t * grid.lambda * std::ldexp(1.0, r)));
    }

    void qft(int mode, bool inverse = false) { c.gates.push_back(qft_marker(mode, inverse)); }

    void parity(int mode) {
        for (int r = 0; r < grid.n; ++r)
            c.gates.push_back(g1(GateKind::X, lay.mode_qubit(mode, r)));
    }

    void cond_parity(int control, int mode) {
        for (int r = 0; r < grid.n; ++r)
            c.gates.push_back(g2(GateKind::CNOT, control, lay.mode_qubit(mode, r)));
    }

    void mode_swap(int m1, int m2) {
        for (int r = 0; r < grid.n; ++r)
            c.gates.push_back(g2(GateKind::Swap, lay.mode_qubit(m1, r), lay.mode_qubit(m2, r)));
    }
};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite parameter");
}

CompiledCircuit make_circuit(const GridSpec& grid) {
    CompiledCircuit c;
    c.qubits_per_mode = grid.n;
    return c;
}

int mod4(long s) {
    int m = static_cast<int>(s % 4);
    return m < 0 ? m + 4 : m;
}

} // namespace

GateCounts CompiledCircuit::counts() const {
    GateCounts k;
    for (const auto& g : gates) {
        switch (g.kind) {
            case GateKind::Qft: ++k.qft; break;
            case GateKind::H: ++k.h; break;
            case GateKind::Rz: ++k.rz; break;
            case GateKind::X: ++k.x; break;
            case GateKind::CNOT: ++k.cnot; break;
            case GateKind::Swap: ++k.swap_; break;
            case GateKind::CzRot: ++k.czrot; break;
            case GateKind::DiagPhase: ++k.diag; break;
            case GateKind::Mz: break;
        }
    }
    return k;
}

void CompiledCircuit::append(const CompiledCircuit& other) {
    if (qubits_per_mode == 0) qubits_per_mode = other.qubits_per_mode;
    if (other.qubits_per_mode != 0 && other.qubits_per_mode != qubits_per_mode)
        throw InvalidArgument("append: incompatible circuits");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    global_phase += other.global_phase;
}

void CompiledCircuit::elide_qft_pairs() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < gates.size(); ++i) {
            if (gates[i].kind == GateKind::Qft && gates[i + 1].kind == GateKind::Qft &&
                gates[i].mode == gates[i + 1].mode && gates[i].inverse != gates[i + 1].inverse) {
                gates.erase(gates.begin() + static_cast<long>(i),
                            gates.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
}

ResourceReport count_resources(const CompiledCircuit& circuit) {
    ResourceReport r;
    r.unit = circuit.counts();
    const long n = circuit.qubits_per_mode;
    GateCounts e = r.unit;
    e.h += e.qft * n;
    e.rz += e.qft * n * (n - 1) / 2 + e.czrot;
    e.cnot += e.qft * n * (n - 1) + 2 * e.czrot;
    e.czrot = 0;
    e.qft = 0;
    r.expanded = e;
    r.expanded_cnot_swap3 = e.cnot + 3 * e.swap_;
    return r;
}

AngleSplit split_angle(double theta, AngleFamily family) {
    require_finite(theta, "split_angle");
    const double step = (family == AngleFamily::rotation) ? kPi / 2.0 : kPi;
    const double x = theta / step;
    const long lo = static_cast<long>(std::floor(x));
    AngleSplit best;
    bool have = false;
    for (long s : {lo, lo + 1}) {
        const double delta = theta - static_cast<double>(s) * step;
        if (!have || std::abs(delta) < std::abs(best.delta) ||
            (std::abs(delta) == std::abs(best.delta) && std::abs(s) < std::abs(best.steps))) {
            best = AngleSplit{static_cast<double>(s) * step, delta, s};
            have = true;
        }
    }
    return best;
}

ShearCoefficients shear_coefficients(double r) {
    require_finite(r, "shear_coefficients");
    const double sgn = (r >= 0.0) ? 1.0 : -1.0;
    const double root = std::sqrt(std::abs(std::exp(r) - 1.0));
    return ShearCoefficients{-std::exp(r / 2.0) * root, sgn * std::exp(-r / 2.0) * root,
                             std::exp(-r / 2.0) * root, -sgn * std::exp(r / 2.0) * root};
}

CompiledCircuit compile_displacement(cplx alpha, const GridSpec& grid,
                                     const RegisterLayout& layout, int mode) {
    require_finite(alpha.real(), "compile_displacement");
    require_finite(alpha.imag(), "compile_displacement");
    CompiledCircuit c = make_circuit(grid);
    Emitter em{c, grid, layout};
    const double tq = std::sqrt(2.0) * alpha.imag();  // e^{i tq q}
    const double tp = -std::sqrt(2.0) * alpha.real(); // e^{i tp p}
    c.global_phase += -alpha.imag() * alpha.real();
    if (tp != 0.0) {
        em.qft(mode);
        em.rz_layer(mode, tp);
        em.qft(mode, true);
    }
    if (tq != 0.0) em.rz_layer(mode, tq);
    return c;
}

CompiledCircuit compile_rotation(double theta, const GridSpec& grid,
                                 const RegisterLayout& layout, int mode) {
    require_finite(theta, "compile_rotation");
    CompiledCircuit c = make_circuit(grid);
    Emitter em{c, grid, layout};
    const AngleSplit sp = split_angle(theta, AngleFamily::rotation);
    if (sp.delta != 0.0) {
        const double tq = -std::tan(sp.delta / 2.0) / 2.0;
        const double tp = -std::sin(sp.delta) / 2.0;
        em.shear(mode, tq);
        em.qft(mode);
        em.shear(mode, tp);
        em.qft(mode, true);
        em.shear(mode, tq);
    }
    switch (mod4(sp.steps)) {
        case 0: break;
        case 1: em.qft(mode); break;
        case 2: em.parity(mode); break;
        case 3: em.qft(mode, true); break;
    }
    c.global_phase += -sp.theta0 / 2.0;
    c.elide_qft_pairs();
    return c;
}

CompiledCircuit compile_squeezing(double r, const GridSpec& grid, const RegisterLayout& layout,
                                  int mode) {
    require_finite(r, "compile_squeezing");
    CompiledCircuit c = make_circuit(grid);
    if (r == 0.0) return c;
    Emitter em{c, grid, layout};
    const ShearCoefficients mu = shear_coefficients(r);
    em.qft(mode);
    em.shear(mode, mu.mu1 / 2.0);
    em.qft(mode, true);
    em.shear(mode, mu.mu2 / 2.0);
    em.qft(mode);
    em.shear(mode, mu.mu3 / 2.0);
    em.qft(mode, true);
    em.shear(mode, mu.mu4 / 2.0);
    return c;
}

CompiledCircuit compile_beamsplitter(double theta, const GridSpec& grid,
                                     const RegisterLayout& layout, int mode1, int mode2) {
    require_finite(theta, "compile_beamsplitter");
    if (mode1 == mode2) throw InvalidArgument("compile_beamsplitter: modes must differ");
    CompiledCircuit c = make_circuit(grid);
    Emitter em{c, grid, layout};
    const AngleSplit sp = split_angle(theta, AngleFamily::beamsplitter);
    if (sp.delta != 0.0) {
        const double t1 = -std::tan(sp.delta / 4.0);
        const double t2 = -std::sin(sp.delta / 2.0);
        em.cross_shear(mode1, mode2, t1);
        em.qft(mode1);
        em.qft(mode2);
        em.cross_shear(mode1, mode2, t2);
        em.qft(mode1, true);
        em.qft(mode2, true);
        em.cross_shear(mode1, mode2, t1);
    }
    switch (mod4(sp.steps)) {
        case 0: break;
        case 1:
            em.mode_swap(mode1, mode2);
            em.qft(mode1);
            em.qft(mode2);
            break;
        case 2:
            em.parity(mode1);
            em.parity(mode2);
            break;
        case 3:
            em.mode_swap(mode1, mode2);
            em.qft(mode1, true);
            em.qft(mode2, true);
            break;
    }
    c.elide_qft_pairs();
    return c;
}

CompiledCircuit compile_conditional_displacement(cplx alpha, const GridSpec& grid,
                                                 const RegisterLayout& layout, int mode,
                                                 int control, CdForm form) {
    require_finite(alpha.real(), "compile_conditional_displacement");
    require_finite(alpha.imag(), "compile_conditional_displacement");
    CompiledCircuit c = make_circuit(grid);
    if (alpha == cplx(0.0)) return c;
    Emitter em{c, grid, layout};
    const double tq = std::sqrt(2.0) * alpha.imag();
    const double tp = -std::sqrt(2.0) * alpha.real();
    c.global_phase += -alpha.imag() * alpha.real();
    if (form == CdForm::sandwich) {
        em.cond_parity(control, mode);
        if (tp != 0.0) {
            em.qft(mode);
            em.rz_layer(mode, tp);
            em.qft(mode, true);
        }
        if (tq != 0.0) em.rz_layer(mode, tq);
        em.cond_parity(control, mode);
    } else {
        if (tp != 0.0) {
            em.qft(mode);
            em.cond_rz_layer(control, mode, tp);
            em.qft(mode, true);
        }
        if (tq != 0.0) em.cond_rz_layer(control, mode, tq);
    }
    return c;
}

CompiledCircuit compile_conditional_rotation(double theta, const GridSpec& grid,
                                             const RegisterLayout& layout, int mode, int control) {
    require_finite(theta, "compile_conditional_rotation");
    CompiledCircuit c = make_circuit(grid);
    Emitter em{c, grid, layout};
    const AngleSplit sp = split_angle(theta, AngleFamily::rotation);
    double control_rz = 0.0;
    if (sp.delta != 0.0) {
        const double tq = -std::tan(sp.delta / 2.0) / 2.0;
        const double tp = -std::sin(sp.delta) / 2.0;
        em.cond_shear(control, mode, tq, control_rz);
        em.qft(mode);
        em.cond_shear(control, mode, tp, control_rz);
        em.qft(mode, true);
        em.cond_shear(control, mode, tq, control_rz);
    }
    switch (mod4(sp.steps)) {
        case 0: break;
        case 1:
            em.cond_parity(control, mode);
            em.qft(mode);
            break;
        case 2: em.parity(mode); break;
        case 3:
            em.cond_parity(control, mode);
            em.qft(mode, true);
            break;
    }
    control_rz += -sp.theta0;
    if (control_rz != 0.0) c.gates.push_back(g1(GateKind::Rz, control, control_rz));
    c.elide_qft_pairs();
    return c;
}

CompiledCircuit compile_conditional_squeezing(double r, const GridSpec& grid,
                                              const RegisterLayout& layout, int mode,
                                              int control) {
    require_finite(r, "compile_conditional_squeezing");
    CompiledCircuit c = make_circuit(grid);
    if (r == 0.0) return c;
    Emitter em{c, grid, layout};
    const ShearCoefficients cp = shear_coefficients(r);
    const ShearCoefficients cm = shear_coefficients(-r);
    const double up[4] = {cp.mu1, cp.mu2, cp.mu3, cp.mu4};
    const double um[4] = {cm.mu1, cm.mu2, cm.mu3, cm.mu4};
    double control_rz = 0.0;
    for (int station = 0; station < 4; ++station) {
        const double u = 0.5 * (up[station] + um[station]);
        const double v = 0.5 * (up[station] - um[station]);
        const bool momentum_frame = (station % 2 == 0); // stations 1 and 3 act on p^2
        if (momentum_frame) em.qft(mode);
        em.shear(mode, u / 2.0);
        em.cond_shear(control, mode, v / 2.0, control_rz);
        if (momentum_frame) em.qft(mode, true);
    }
    if (control_rz != 0.0) c.gates.push_back(g1(GateKind::Rz, control, control_rz));
    return c;
}

CompiledCircuit compile_conditional_beamsplitter(double theta, const GridSpec& grid,
                                                 const RegisterLayout& layout, int mode1,
                                                 int mode2, int control) {
    require_finite(theta, "compile_conditional_beamsplitter");
    if (mode1 == mode2) throw InvalidArgument("compile_conditional_beamsplitter: modes must differ");
    CompiledCircuit c = make_circuit(grid);
    Emitter em{c, grid, layout};
    const AngleSplit sp = split_angle(theta, AngleFamily::beamsplitter);
    if (sp.delta != 0.0) {
        const double t1 = -std::tan(sp.delta / 4.0);
        const double t2 = -std::sin(sp.delta / 2.0);
        em.cond_cross_shear(control, mode1, mode2, t1);
        em.qft(mode1);
        em.qft(mode2);
        em.cond_cross_shear(control, mode1, mode2, t2);
        em.qft(mode1, true);
        em.qft(mode2, true);
        em.cond_cross_shear(control, mode1, mode2, t1);
    }
    switch (mod4(sp.steps)) {
        case 0: break;
        case 1:
            em.mode_swap(mode1, mode2);
            em.cond_parity(control, mode1);
            em.cond_parity(control, mode2);
            em.qft(mode1);
            em.qft(mode2);
            break;
        case 2:
            em.parity(mode1);
            em.parity(mode2);
            break;
        case 3:
            em.mode_swap(mode1, mode2);
            em.cond_parity(control, mode1);
            em.cond_parity(control, mode2);
            em.qft(mode1, true);
            em.qft(mode2, true);
            break;
    }
    c.elide_qft_pairs();
    return c;
}

CompiledCircuit compile_gate(const HybridGate& gate, const GridSpec& grid,
                             const RegisterLayout& layout) {
    using K = HybridGate::Kind;
    switch (gate.kind) {
        case K::D: return compile_displacement(gate.alpha, grid, layout, gate.mode);
        case K::R: return compile_rotation(gate.param, grid, layout, gate.mode);
        case K::S: return compile_squeezing(gate.param, grid, layout, gate.mode);
        case K::BS: return compile_beamsplitter(gate.param, grid, layout, gate.mode, gate.mode2);
        case K::CD:
            return compile_conditional_displacement(gate.alpha, grid, layout, gate.mode,
                                                    layout.dv_qubit(gate.control));
        case K::CR:
            return compile_conditional_rotation(gate.param, grid, layout, gate.mode,
                                                layout.dv_qubit(gate.control));
        case K::CS:
            return compile_conditional_squeezing(gate.param, grid, layout, gate.mode,
                                                 layout.dv_qubit(gate.control));
        case K::CBS:
            return compile_conditional_beamsplitter(gate.param, grid, layout, gate.mode,
                                                    gate.mode2, layout.dv_qubit(gate.control));
        case K::Fourier: {
            CompiledCircuit c = make_circuit(grid);
            c.gates.push_back(qft_marker(gate.mode, gate.inverse));
            return c;
        }
        case K::Parity: {
            CompiledCircuit c = make_circuit(grid);
            Emitter{c, grid, layout}.parity(gate.mode);
            return c;
        }
        case K::CondParity: {
            CompiledCircuit c = make_circuit(grid);
            Emitter{c, grid, layout}.cond_parity(layout.dv_qubit(gate.control), gate.mode);
            return c;
        }
        case K::ModeSwap: {
            CompiledCircuit c = make_circuit(grid);
            Emitter{c, grid, layout}.mode_swap(gate.mode, gate.mode2);
            return c;
        }
        case K::PhaseQ: {
            CompiledCircuit c = make_circuit(grid);
            Emitter{c, grid, layout}.rz_layer(gate.mode, gate.param);
            return c;
        }
        case K::PhaseQQ: {
            CompiledCircuit c = make_circuit(grid);
            Emitter em{c, grid, layout};
            if (gate.mode2 < 0 || gate.mode2 == gate.mode)
                em.shear(gate.mode, gate.param);
            else
                em.cross_shear(gate.mode, gate.mode2, gate.param);
            return c;
        }
        case K::CondPhaseQ: {
            CompiledCircuit c = make_circuit(grid);
            Emitter{c, grid, layout}.cond_rz_layer(layout.dv_qubit(gate.control), gate.mode,
                                                   gate.param);
            return c;
        }
        case K::CondPhaseQ2: {
            CompiledCircuit c = make_circuit(grid);
            double rzacc = 0.0;
            Emitter{c, grid, layout}.cond_shear(layout.dv_qubit(gate.control), gate.mode,
                                                gate.param, rzacc);
            if (rzacc != 0.0)
                c.gates.push_back(g1(GateKind::Rz, layout.dv_qubit(gate.control), rzacc));
            return c;
        }
        case K::CondPhaseQ1Q2: {
            CompiledCircuit c = make_circuit(grid);
            Emitter{c, grid, layout}.cond_cross_shear(layout.dv_qubit(gate.control), gate.mode,
                                                      gate.mode2, gate.param);
            return c;
        }
    }
    throw InvalidArgument("compile_gate: unknown kind");
}

void run_circuit(const CompiledCircuit& circuit, StateVector& state, const GridSpec& grid,
                 StateVector::QftPath path) {
    for (const auto& g : circuit.gates) {
        if (g.kind == GateKind::Qft)
            state.apply_qft(g.mode, grid, g.inverse, path);
        else
            state.apply_gate(g, grid);
    }
    if (circuit.global_phase != 0.0) state.phase(circuit.global_phase);
}

CompiledCircuit expand_qft_units(const CompiledCircuit& circuit, const GridSpec& grid,
                                 const RegisterLayout& layout) {
    CompiledCircuit out;
    out.qubits_per_mode = circuit.qubits_per_mode;
    out.global_phase = circuit.global_phase;
    const int n = grid.n;
    const double c = 0.5 * static_cast<double>(grid.N - 1);
    const double shift = 2.0 * kPi * c / static_cast<double>(grid.N);
    auto emit_cphase = [&](int a, int b, double theta) {
        // diag(1,1,1,e^{i theta}) = e^{i theta/4} Rz(-theta/2) Rz(-theta/2) CzRot(-theta/2)
        out.global_phase += theta / 4.0;
        out.gates.push_back(g1(GateKind::Rz, a, -theta / 2.0));
        out.gates.push_back(g1(GateKind::Rz, b, -theta / 2.0));
        out.gates.push_back(g2(GateKind::CzRot, a, b, -theta / 2.0));
    };
    for (const auto& g : circuit.gates) {
        if (g.kind != GateKind::Qft) {
            out.gates.push_back(g);
            continue;
        }
        const double sgn = g.inverse ? -1.0 : 1.0;
        auto q = [&](int r) { return layout.mode_qubit(g.mode, r); };
        out.gates.push_back(diag_gate(g.mode, sgn * shift));
        if (!g.inverse) {
            for (int j = n - 1; j >= 0; --j) {
                out.gates.push_back(g1(GateKind::H, q(j)));
                for (int m = j - 1; m >= 0; --m)
                    emit_cphase(q(m), q(j), -2.0 * kPi / std::ldexp(1.0, j - m + 1));
            }
            for (int r = 0; r < n / 2; ++r)
                out.gates.push_back(g2(GateKind::Swap, q(r), q(n - 1 - r)));
        } else {
            for (int r = 0; r < n / 2; ++r)
                out.gates.push_back(g2(GateKind::Swap, q(r), q(n - 1 - r)));
            for (int j = 0; j < n; ++j) {
                for (int m = 0; m < j; ++m)
                    emit_cphase(q(m), q(j), 2.0 * kPi / std::ldexp(1.0, j - m + 1));
                out.gates.push_back(g1(GateKind::H, q(j)));
            }
        }
        out.gates.push_back(diag_gate(g.mode, sgn * shift));
        out.global_phase += -sgn * 2.0 * kPi * c * c / static_cast<double>(grid.N);
    }
    return out;
}

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::Rz: return "RZ";
        case GateKind::X: return "X";
        case GateKind::CNOT: return "CNOT";
        case GateKind::Swap: return "SWAP";
        case GateKind::CzRot: return "CZR";
        case GateKind::DiagPhase: return "DIAG";
        case GateKind::Qft: return "QFT";
        case GateKind::Mz: return "MZ";
    }
    return "?";
}

namespace {
std::string fmt_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}
} // namespace

std::string circuit_to_json(const CompiledCircuit& circuit) {
    nlohmann::json j;
    j["qubits_per_mode"] = circuit.qubits_per_mode;
    j["global_phase"] = circuit.global_phase;
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : circuit.gates) {
        nlohmann::json e;
        e["kind"] = gate_kind_name(g.kind);
        switch (g.kind) {
            case GateKind::Qft:
                e["mode"] = g.mode;
                e["inverse"] = g.inverse;
                break;
            case GateKind::DiagPhase:
                e["mode"] = g.mode;
                e["angle"] = g.angle;
                break;
            case GateKind::H:
            case GateKind::X:
                e["qubits"] = {g.q0};
                break;
            case GateKind::Rz:
                e["qubits"] = {g.q0};
                e["angle"] = g.angle;
                break;
            case GateKind::CNOT:
            case GateKind::Swap:
                e["qubits"] = {g.q0, g.q1};
                break;
            case GateKind::CzRot:
                e["qubits"] = {g.q0, g.q1};
                e["angle"] = g.angle;
                break;
            case GateKind::Mz:
                e["qubits"] = {g.q0};
                break;
        }
        gates.push_back(e);
    }
    j["gates"] = gates;
    const auto rep = count_resources(circuit);
    j["counts"] = {{"qft", rep.unit.qft},   {"h", rep.unit.h},        {"rz", rep.unit.rz},
                   {"x", rep.unit.x},       {"cnot", rep.unit.cnot},  {"swap", rep.unit.swap_},
                   {"czrot", rep.unit.czrot}};
    j["expanded_counts"] = {{"h", rep.expanded.h},
                            {"rz", rep.expanded.rz},
                            {"x", rep.expanded.x},
                            {"cnot", rep.expanded.cnot},
                            {"swap", rep.expanded.swap_},
                            {"cnot_swap_expanded", rep.expanded_cnot_swap3}};
    return j.dump(2);
}

std::string circuit_to_text(const CompiledCircuit& circuit) {
    std::string out;
    for (const auto& g : circuit.gates) {
        out += gate_kind_name(g.kind);
        switch (g.kind) {
            case GateKind::Qft:
                out += g.inverse ? " inv " : " ";
                out += std::to_string(g.mode);
                break;
            case GateKind::DiagPhase:
                out += " " + std::to_string(g.mode) + " " + fmt_angle(g.angle);
                break;
            case GateKind::H:
            case GateKind::X:
            case GateKind::Mz:
                out += " " + std::to_string(g.q0);
                break;
            case GateKind::Rz:
                out += " " + std::to_string(g.q0) + " " + fmt_angle(g.angle);
                break;
            case GateKind::CNOT:
            case GateKind::Swap:
                out += " " + std::to_string(g.q0) + " " + std::to_string(g.q1);
                break;
            case GateKind::CzRot:
                out += " " + std::to_string(g.q0) + " " + std::to_string(g.q1) + " " +
                       fmt_angle(g.angle);
                break;
        }
        out += "\n";
    }
    out += "GLOBALPHASE " + fmt_angle(circuit.global_phase) + "\n";
    return out;
}

} // namespace cvdv
