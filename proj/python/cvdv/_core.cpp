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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvdv/error_lab.hpp"
#include "cvdv/run.hpp"

namespace py = pybind11;
using namespace cvdv;

namespace {

CompiledCircuit compile_named(const std::string& kind, int n, double param, cplx alpha,
                              const std::string& cd_form) {
    const GridSpec grid = GridSpec::make(n);
    const bool two = (kind == "BS" || kind == "CBS");
    const bool cond = (kind == "CD" || kind == "CR" || kind == "CS" || kind == "CBS");
    RegisterLayout lay{two ? 2 : 1, n, cond ? 1 : 0};
    const int ctrl = cond ? lay.dv_qubit(0) : -1;
    if (kind == "D") return compile_displacement(alpha, grid, lay, 0);
    if (kind == "R") return compile_rotation(param, grid, lay, 0);
    if (kind == "S") return compile_squeezing(param, grid, lay, 0);
    if (kind == "BS") return compile_beamsplitter(param, grid, lay, 0, 1);
    if (kind == "CD")
        return compile_conditional_displacement(
            alpha, grid, lay, 0, ctrl,
            cd_form == "sandwich" ? CdForm::sandwich : CdForm::cz_legs);
    if (kind == "CR") return compile_conditional_rotation(param, grid, lay, 0, ctrl);
    if (kind == "CS") return compile_conditional_squeezing(param, grid, lay, 0, ctrl);
    if (kind == "CBS") return compile_conditional_beamsplitter(param, grid, lay, 0, 1, ctrl);
    throw InvalidArgument("unknown gate kind " + kind);
}

py::dict counts_dict(const CompiledCircuit& c) {
    const auto rep = count_resources(c);
    py::dict unit, expanded;
    unit["qft"] = rep.unit.qft;
    unit["h"] = rep.unit.h;
    unit["rz"] = rep.unit.rz;
    unit["x"] = rep.unit.x;
    unit["cnot"] = rep.unit.cnot;
    unit["swap"] = rep.unit.swap_;
    unit["czrot"] = rep.unit.czrot;
    expanded["h"] = rep.expanded.h;
    expanded["rz"] = rep.expanded.rz;
    expanded["x"] = rep.expanded.x;
    expanded["cnot"] = rep.expanded.cnot;
    expanded["swap"] = rep.expanded.swap_;
    py::dict out;
    out["unit"] = unit;
    out["expanded"] = expanded;
    out["global_phase"] = c.global_phase;
    out["gates"] = static_cast<long>(c.gates.size());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "position-encoded qubit simulation of hybrid oscillator-qubit circuits";

    py::register_exception<InvalidArgument>(m, "InvalidArgument");
    py::register_exception<EncodingError>(m, "EncodingError");

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init(&GridSpec::make), py::arg("n"))
        .def_readonly("n", &GridSpec::n)
        .def_readonly("N", &GridSpec::N)
        .def_readonly("lam", &GridSpec::lambda)
        .def("position", &GridSpec::position);

    m.def("hermite_psi", &hermite_psi, py::arg("k"), py::arg("x"));
    m.def("encode_fock", &encode_fock, py::arg("k"), py::arg("grid"));
    m.def("shifted_qft_matrix", &shifted_qft_matrix);
    m.def("qft_error_fock", &qft_error_fock, py::arg("k"), py::arg("grid"));
    m.def(
        "qft_error_sweep",
        [](const std::vector<int>& ns, int kmax) {
            py::list out;
            for (const auto& p : qft_error_sweep(ns, kmax)) {
                py::dict d;
                d["n"] = p.n;
                d["k"] = p.k;
                d["eps"] = p.eps;
                out.append(d);
            }
            return out;
        },
        py::arg("ns"), py::arg("kmax") = -1);
    m.def(
        "fit_lemma1",
        [](const std::vector<std::tuple<int, int, double>>& pts, double lo, double hi,
           const std::string& method) {
            std::vector<QftErrorPoint> v;
            for (const auto& [n, k, e] : pts) v.push_back({n, k, e});
            const ErrorFit fit = fit_per_fock(
                v, lo, hi,
                method == "ols" ? FitMethod::least_squares : FitMethod::window_anchored);
            py::dict d;
            d["c"] = py::make_tuple(fit.c1, fit.c2, fit.c3, fit.c4);
            py::dict per;
            for (const auto& [n, ab] : fit.per_n)
                per[py::int_(n)] = py::make_tuple(ab.first, ab.second);
            d["per_n"] = per;
            return d;
        },
        py::arg("points"), py::arg("window_lo") = 1e-7, py::arg("window_hi") = 1e-1,
        py::arg("method") = "chord");
    m.def("qubits_for", &qubits_for, py::arg("gamma"), py::arg("eps"));
    m.def("advantage_boundary", &advantage_boundary, py::arg("n"));
    m.def(
        "fock_encoding_cost",
        [](int n, int n_newton, double alpha, double eps, int k) {
            const FockCost c = fock_encoding_cost(n, n_newton, alpha, eps, k);
            return py::make_tuple(c.n_cnot, c.n_exp);
        },
        py::arg("n"), py::arg("n_newton"), py::arg("alpha"), py::arg("eps"), py::arg("k_order"));
    m.def(
        "compile_gate",
        [](const std::string& kind, int n, double param, cplx alpha, const std::string& cd_form) {
            return counts_dict(compile_named(kind, n, param, alpha, cd_form));
        },
        py::arg("kind"), py::arg("n"), py::arg("param") = 0.0, py::arg("alpha") = cplx(0.0),
        py::arg("cd_form") = "sandwich", "Compile one hybrid gate and return its resource counts");
    m.def(
        "gate_error",
        [](const std::string& kind, int n, double param, cplx alpha, int k) {
            HybridGate g;
            if (kind == "D") {
                g.kind = HybridGate::Kind::D;
                g.alpha = alpha;
            } else if (kind == "R") {
                g.kind = HybridGate::Kind::R;
                g.param = param;
            } else if (kind == "S") {
                g.kind = HybridGate::Kind::S;
                g.param = param;
            } else if (kind == "BS") {
                g.kind = HybridGate::Kind::BS;
                g.param = param;
                g.mode2 = 1;
            } else {
                throw InvalidArgument("gate_error: kind must be D|R|S|BS");
            }
            FockOracle oracle(kind == "BS" ? 64 : 256);
            return gate_error_fock(g, k, GridSpec::make(n), oracle);
        },
        py::arg("kind"), py::arg("n"), py::arg("param") = 0.0, py::arg("alpha") = cplx(0.0),
        py::arg("k") = 0);
    m.def(
        "simulate",
        [](const std::string& program_text, std::size_t shots, py::object seed) {
            const Program p = parse_program(program_text);
            std::optional<std::uint64_t> s;
            if (!seed.is_none()) s = seed.cast<std::uint64_t>();
            auto res = simulate_program(p, shots, s);
            py::list out;
            for (const auto& r : res.records) out.append(r.to_json_line());
            return out;
        },
        py::arg("program"), py::arg("shots") = 1, py::arg("seed") = py::none(),
        "Parse and run a circuit program; returns measurement records as JSON lines");
    m.def("parse_roundtrip", [](const std::string& text) {
        return print_program(parse_program(text));
    });
}
