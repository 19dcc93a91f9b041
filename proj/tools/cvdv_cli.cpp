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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cvdv/error_lab.hpp"
#include "cvdv/run.hpp"

namespace {

using namespace cvdv;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << data;
}

std::vector<int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    std::vector<int> out;
    if (dots == std::string::npos) {
        out.push_back(std::stoi(s));
        return out;
    }
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    if (hi < lo) throw std::runtime_error("bad range " + s);
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

int cmd_simulate(const std::string& prog_path, std::uint64_t seed, bool seed_set,
                 std::size_t shots, const std::string& out_path) {
    Program p = parse_program(read_file(prog_path));
    auto res = simulate_program(p, shots,
                                seed_set ? std::optional<std::uint64_t>(seed) : std::nullopt);
    std::string out;
    for (const auto& r : res.records) out += r.to_json_line() + "\n";
    write_output(out_path, out);
    return 0;
}

int cmd_compile(const std::string& prog_path, bool expand, const std::string& format,
                const std::string& cd_form, const std::string& out_path) {
    Program p = parse_program(read_file(prog_path));
    const CdForm form = (cd_form == "sandwich") ? CdForm::sandwich : CdForm::cz_legs;
    CompiledCircuit circ = compile_program(p, form);
    if (expand) {
        const GridSpec grid = GridSpec::make(p.qubits_per_mode);
        RegisterLayout lay{p.modes, p.qubits_per_mode, p.dv_qubits};
        circ = expand_qft_units(circ, grid, lay);
    }
    write_output(out_path, format == "text" ? circuit_to_text(circ) : circuit_to_json(circ));
    return 0;
}

int cmd_qft_error(const std::string& range, int kmax, const std::string& out_path) {
    auto pts = qft_error_sweep(parse_range(range), kmax);
    write_output(out_path, qft_error_csv(pts));
    return 0;
}

int cmd_fit(const std::string& in_path, const std::string& method, double win_lo, double win_hi,
            const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open " + in_path);
    std::string line;
    std::vector<QftErrorPoint> pts;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) { // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        QftErrorPoint p{};
        if (std::sscanf(line.c_str(), "%d,%d,%lf", &p.n, &p.k, &p.eps) != 3)
            throw std::runtime_error("bad csv line: " + line);
        pts.push_back(p);
    }
    const FitMethod m =
        (method == "ols") ? FitMethod::least_squares : FitMethod::window_anchored;
    ErrorFit fit = fit_per_fock(pts, win_lo, win_hi, m);
    nlohmann::json j;
    j["method"] = (m == FitMethod::least_squares) ? "ols" : "window_anchored";
    j["window"] = {fit.win_lo, fit.win_hi};
    j["meta"] = {{"c1", fit.c1}, {"c2", fit.c2}, {"c3", fit.c3}, {"c4", fit.c4}};
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [n, ab] : fit.per_n)
        per[std::to_string(n)] = {{"a", ab.first}, {"b", ab.second}};
    j["per_n"] = per;
    if (!fit.skipped.empty()) {
        j["skipped_n"] = fit.skipped;
        std::cerr << "warning: " << fit.skipped.size()
                  << " register size(s) had fewer than 3 in-window points and were skipped\n";
    }
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_gate_error(const std::string& gate, const std::string& param, const std::string& range,
                   int kmax, const std::string& out_path) {
    HybridGate g;
    if (gate == "D") {
        g.kind = HybridGate::Kind::D;
        g.alpha = parse_complex_literal(param);
    } else if (gate == "R") {
        g.kind = HybridGate::Kind::R;
        g.param = std::stod(param);
    } else if (gate == "S") {
        g.kind = HybridGate::Kind::S;
        g.param = std::stod(param);
    } else if (gate == "BS") {
        g.kind = HybridGate::Kind::BS;
        g.mode2 = 1;
        g.param = std::stod(param);
    } else {
        throw std::runtime_error("unknown gate " + gate + " (expected D|R|S|BS)");
    }
    const bool two_mode = gate == "BS";
    FockOracle oracle(two_mode ? 64 : 256);
    std::vector<GateErrorPoint> pts;
    for (int n : parse_range(range)) {
        const GridSpec grid = GridSpec::make(n);
        for (int k = 0; k <= kmax; ++k)
            pts.push_back({gate, n, k, gate_error_fock(g, k, grid, oracle)});
    }
    write_output(out_path, gate_error_csv(pts));
    return 0;
}

int cmd_estimate(long gamma, double eps) {
    std::cout << "n=" << qubits_for(gamma, eps) << "\n";
    return 0;
}

int cmd_advantage(int nmax, double eps, const std::string& out_path) {
    write_output(out_path, advantage_csv(nmax, eps));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"position-encoded qubit simulator and compiler for hybrid CV-DV circuits"};
    app.require_subcommand(1);

    std::string prog_path, out_path, format = "json", method = "chord", cd_form = "cz-legs";
    std::string gate = "D", param = "1.0", range = "5..10";
    std::uint64_t seed = 0;
    std::size_t shots = 1;
    int kmax = -1, nmax = 12;
    long gamma = 0;
    double eps = 1e-6, win_lo = 3e-7, win_hi = 1e-1;
    bool expand = false;

    auto* sim = app.add_subcommand("simulate", "run a circuit program, emit measurement records");
    sim->add_option("program", prog_path, "program file")->required();
    auto* seed_opt = sim->add_option("--seed", seed, "rng seed (overrides the program header)");
    sim->add_option("--shots", shots, "number of repetitions");
    sim->add_option("--out", out_path, "output path (default stdout)");

    auto* comp = app.add_subcommand("compile", "lower a program to elementary gates");
    comp->add_option("program", prog_path, "program file")->required();
    comp->add_flag("--expand", expand, "expand QFT units into elementary gates");
    comp->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    comp->add_option("--cd-form", cd_form, "cz-legs|sandwich")
        ->check(CLI::IsMember({"cz-legs", "sandwich"}));
    comp->add_option("--out", out_path, "output path (default stdout)");

    auto* qe = app.add_subcommand("qft-error", "per-Fock QFT error sweep");
    qe->add_option("--n", range, "register sizes, e.g. 5..10")->required();
    qe->add_option("--kmax", kmax, "max Fock level (-1 = sweep past the fit window)");
    qe->add_option("--out", out_path, "output csv path");

    auto* fit = app.add_subcommand("fit-lemma1", "per-Fock fit and meta-fit of sweep data");
    fit->add_option("--in", prog_path, "input csv from qft-error")->required();
    fit->add_option("--method", method, "chord|ols")->check(CLI::IsMember({"chord", "ols"}));
    fit->add_option("--window-lo", win_lo, "fit window lower edge");
    fit->add_option("--window-hi", win_hi, "fit window upper edge");
    fit->add_option("--out", out_path, "output json path");

    auto* ge = app.add_subcommand("gate-error", "per-Fock gate discretization error sweep");
    ge->add_option("--gate", gate, "D|R|S|BS")->required();
    ge->add_option("--param", param, "gate parameter (complex a+bi for D)")->required();
    ge->add_option("--n", range, "register sizes, e.g. 5..8")->required();
    ge->add_option("--kmax", kmax, "max Fock level")->required();
    ge->add_option("--out", out_path, "output csv path");

    auto* est = app.add_subcommand("estimate", "qubits per mode for a Fock cutoff and precision");
    est->add_option("--gamma", gamma, "Fock-level cutoff")->required();
    est->add_option("--eps", eps, "target precision")->required();

    auto* adv = app.add_subcommand("advantage", "hybrid-vs-qubit boundary data");
    adv->add_option("--nmax", nmax, "largest register size");
    adv->add_option("--eps", eps, "target simulation error");
    adv->add_option("--out", out_path, "output csv path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(prog_path, seed, seed_opt->count() > 0, shots, out_path);
        if (comp->parsed()) return cmd_compile(prog_path, expand, format, cd_form, out_path);
        if (qe->parsed()) return cmd_qft_error(range, kmax, out_path);
        if (fit->parsed()) return cmd_fit(prog_path, method, win_lo, win_hi, out_path);
        if (ge->parsed()) return cmd_gate_error(gate, param, range, kmax, out_path);
        if (est->parsed()) return cmd_estimate(gamma, eps);
        if (adv->parsed()) return cmd_advantage(nmax, eps, out_path);
    } catch (const ProgramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const EncodingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
