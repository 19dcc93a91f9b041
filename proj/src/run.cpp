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

#include "cvdv/run.hpp"

#include <cmath>
#include <cstdio>

namespace cvdv {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<cplx> normalized(std::vector<cplx> v) {
    double nn = std::sqrt(norm2(v));
    if (nn == 0.0) throw EncodingError("prep: zero-norm encoded state");
    for (auto& z : v) z /= nn;
    return v;
}

} // namespace

std::string MeasurementRecord::to_json_line() const {
    std::string s = "{\"shot\":" + std::to_string(shot) + ",\"protocol\":\"" + protocol +
                    "\",\"mode\":" + std::to_string(mode) + ",\"outcome\":";
    if (protocol == "heterodyne")
        s += "[" + fmt(alpha.real()) + "," + fmt(alpha.imag()) + "]";
    else if (protocol == "photon")
        s += std::to_string(k);
    else
        s += fmt(x);
    return s + "}";
}

SimulationResult simulate_program(const Program& p, std::size_t shots,
                                  std::optional<std::uint64_t> seed_override) {
    const std::uint64_t seed = seed_override.value_or(p.seed);
    const GridSpec grid = GridSpec::make(p.qubits_per_mode);
    RegisterLayout lay;
    lay.modes = p.modes;
    lay.qubits_per_mode = p.qubits_per_mode;
    lay.dv_qubits = p.dv_qubits;
    lay.validate();

    // initial mode vectors (vacuum unless overridden by prep statements)
    std::vector<std::vector<cplx>> mode_vecs(static_cast<std::size_t>(p.modes));
    for (int m = 0; m < p.modes; ++m)
        mode_vecs[static_cast<std::size_t>(m)] = normalized(encode_fock(0, grid));
    for (const auto& st : p.statements) {
        if (st.type != Program::Stmt::Type::prep) continue;
        const auto& pr = st.prep;
        switch (pr.kind) {
            case Program::Prep::Kind::fock:
                mode_vecs[static_cast<std::size_t>(pr.mode)] =
                    normalized(encode_fock(pr.fock_level, grid));
                break;
            case Program::Prep::Kind::coherent:
                mode_vecs[static_cast<std::size_t>(pr.mode)] =
                    normalized(encode(coherent_wavefunction(pr.alpha), grid));
                break;
            case Program::Prep::Kind::vacuum:
                mode_vecs[static_cast<std::size_t>(pr.mode)] = normalized(encode_fock(0, grid));
                break;
        }
    }

    SimulationResult result;
    for (std::size_t shot = 0; shot < shots; ++shot) {
        Rng rng = Rng::for_shot(seed, shot);
        StateVector sv = StateVector::from_mode_vectors(lay, mode_vecs);
        for (const auto& st : p.statements) {
            if (st.type == Program::Stmt::Type::prep) continue;
            if (st.type == Program::Stmt::Type::gate) {
                auto circ = compile_gate(st.gate, grid, lay);
                run_circuit(circ, sv, grid);
                continue;
            }
            MeasurementRecord rec;
            rec.shot = shot;
            rec.mode = st.meas.mode;
            switch (st.meas.kind) {
                case Program::Meas::Kind::homodyne: {
                    rec.protocol = "homodyne";
                    rec.x = homodyne(sv, st.meas.mode, st.meas.basis, grid, rng).x;
                    break;
                }
                case Program::Meas::Kind::heterodyne: {
                    rec.protocol = "heterodyne";
                    rec.alpha = heterodyne(sv, st.meas.mode, grid, rng);
                    break;
                }
                case Program::Meas::Kind::photon: {
                    rec.protocol = "photon";
                    const long cutoff = (1L << st.meas.gamma_bits) - 1;
                    rec.k = photon_count(sv, st.meas.mode, cutoff, grid, rng).k;
                    break;
                }
            }
            result.records.push_back(rec);
        }
    }
    return result;
}

CompiledCircuit compile_program(const Program& p, CdForm cd_form) {
    const GridSpec grid = GridSpec::make(p.qubits_per_mode);
    RegisterLayout lay;
    lay.modes = p.modes;
    lay.qubits_per_mode = p.qubits_per_mode;
    lay.dv_qubits = p.dv_qubits;
    lay.validate();
    CompiledCircuit out;
    out.qubits_per_mode = grid.n;
    for (const auto& st : p.statements) {
        if (st.type == Program::Stmt::Type::meas)
            throw InvalidArgument(
                "compile: measurement statements are adaptive protocols; use simulate");
        if (st.type != Program::Stmt::Type::gate) continue;
        if (st.gate.kind == HybridGate::Kind::CD)
            out.append(compile_conditional_displacement(st.gate.alpha, grid, lay, st.gate.mode,
                                                        lay.dv_qubit(st.gate.control), cd_form));
        else
            out.append(compile_gate(st.gate, grid, lay));
    }
    return out;
}

} // namespace cvdv
