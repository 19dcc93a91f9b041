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

#include "cvdv/error_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cvdv {

double qft_error(const Wavefunction& position, const Wavefunction& momentum,
                 const GridSpec& grid) {
    auto encq = encode(position, grid);
    auto encp = encode(momentum, grid);
    auto f = apply_shifted_qft_dense(encq, grid);
    double s = 0.0;
    for (std::size_t j = 0; j < grid.N; ++j) s += std::norm(encp[j] - f[j]);
    return std::sqrt(s);
}

double qft_error_fock(int k, const GridSpec& grid) {
    auto encq = encode_fock(k, grid);
    auto f = apply_shifted_qft_dense(encq, grid);
    static const cplx mi(0.0, -1.0);
    const cplx ph = std::pow(mi, k % 4);
    double s = 0.0;
    for (std::size_t j = 0; j < grid.N; ++j) s += std::norm(ph * encq[j] - f[j]);
    return std::sqrt(s);
}

std::vector<QftErrorPoint> qft_error_sweep(const std::vector<int>& ns, int kmax) {
    std::vector<QftErrorPoint> out;
    for (int n : ns) {
        const GridSpec grid = GridSpec::make(n);
        // sample the whole Hermite ladder once per grid point
        const int cap = (kmax >= 0) ? kmax : std::min<int>(900, static_cast<int>(grid.N) - 1);
        std::vector<double> table(grid.N * static_cast<std::size_t>(cap + 1));
        std::vector<double> col(static_cast<std::size_t>(cap + 1));
        for (std::size_t j = 0; j < grid.N; ++j) {
            hermite_column(cap, grid.position(j), col.data());
            for (int k = 0; k <= cap; ++k)
                table[j * static_cast<std::size_t>(cap + 1) + static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(k)];
        }
        const auto F = shifted_qft_matrix(grid);
        const double s = std::sqrt(grid.lambda);
        std::vector<cplx> encq(grid.N), f(grid.N);
        int consecutive_large = 0;
        for (int k = 0; k <= cap; ++k) {
            for (std::size_t j = 0; j < grid.N; ++j)
                encq[j] = s * table[j * static_cast<std::size_t>(cap + 1) + static_cast<std::size_t>(k)];
            for (std::size_t r = 0; r < grid.N; ++r) {
                cplx acc = 0.0;
                const cplx* row = F.data() + r * grid.N;
                for (std::size_t j = 0; j < grid.N; ++j) acc += row[j] * encq[j];
                f[r] = acc;
            }
            static const cplx mi(0.0, -1.0);
            const cplx ph = std::pow(mi, k % 4);
            double acc = 0.0;
            for (std::size_t j = 0; j < grid.N; ++j) acc += std::norm(ph * encq[j] - f[j]);
            const double eps = std::sqrt(acc);
            out.push_back({n, k, eps});
            if (kmax < 0) {
                consecutive_large = (eps > 0.3) ? consecutive_large + 1 : 0;
                if (consecutive_large >= 3) break;
            }
        }
    }
    return out;
}

namespace {

struct Line {
    double a, b;
};

std::optional<Line> fit_one(const std::vector<std::pair<int, double>>& pts, double lo, double hi,
                            FitMethod method) {
    std::vector<std::pair<double, double>> in; // (k, log eps)
    for (const auto& [k, e] : pts)
        if (e >= lo && e <= hi && e > kFpFloor) in.emplace_back(k, std::log(e));
    if (in.size() < 3) return std::nullopt;
    if (method == FitMethod::window_anchored) {
        const auto& f = in.front();
        const auto& l = in.back();
        const double a = (l.second - f.second) / (l.first - f.first);
        return Line{a, f.second - a * f.first};
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : in) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(in.size());
    const double a = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return Line{a, (sy - a * sx) / m};
}

Line least_squares_xy(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    const double a = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return Line{a, (sy - a * sx) / m};
}

} // namespace

ErrorFit fit_per_fock(const std::vector<QftErrorPoint>& points, double win_lo, double win_hi,
                      FitMethod method) {
    ErrorFit fit;
    fit.win_lo = win_lo;
    fit.win_hi = win_hi;
    fit.method = method;
    std::map<int, std::vector<std::pair<int, double>>> by_n;
    for (const auto& p : points) by_n[p.n].emplace_back(p.k, p.eps);
    for (auto& [n, pts] : by_n) {
        std::sort(pts.begin(), pts.end());
        if (auto line = fit_one(pts, win_lo, win_hi, method))
            fit.per_n[n] = {line->a, line->b};
        else
            fit.skipped.push_back(n);
    }
    if (fit.per_n.size() >= 2) {
        std::vector<std::pair<double, double>> av, bv;
        for (const auto& [n, ab] : fit.per_n) {
            av.emplace_back(std::pow(2.0, -n / 2.0), ab.first);
            bv.emplace_back(std::pow(2.0, n / 2.0), ab.second);
        }
        const Line la = least_squares_xy(av);
        const Line lb = least_squares_xy(bv);
        fit.c1 = la.a;
        fit.c2 = la.b;
        fit.c3 = lb.a;
        fit.c4 = lb.b;
    }
    return fit;
}

double lemma_eps(double a, double b, int k) { return std::exp(a * k + b); }

double general_state_bound(double a_n, double b_n, const std::vector<double>& fock_probs) {
    // sum p_k e^{2 a k + 2 b} in log space; the bound may exceed 1 by design and
    // the exponentials overflow doubles long before the weights stop mattering
    double lmax = -HUGE_VAL;
    for (std::size_t k = 0; k < fock_probs.size(); ++k) {
        if (fock_probs[k] <= 0.0) continue;
        lmax = std::max(lmax, std::log(fock_probs[k]) + 2.0 * a_n * static_cast<double>(k) +
                                  2.0 * b_n);
    }
    if (lmax == -HUGE_VAL) return 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < fock_probs.size(); ++k) {
        if (fock_probs[k] <= 0.0) continue;
        s += std::exp(std::log(fock_probs[k]) + 2.0 * a_n * static_cast<double>(k) + 2.0 * b_n -
                      lmax);
    }
    const double lres = 0.5 * (lmax + std::log(s));
    return lres > 690.0 ? HUGE_VAL : std::exp(lres);
}

int qubits_for(long gamma, double eps) {
    if (gamma < 0 || eps <= 0.0 || eps >= 1.0) throw InvalidArgument("qubits_for: bad arguments");
    const double C = 0.1027 * static_cast<double>(gamma) + 16.2724 + std::log(1.0 / eps);
    const double x = (C + std::sqrt(C * C + 97.60 * static_cast<double>(gamma))) / 11.5806;
    const double nreal = 2.0 * std::log2(x);
    int n = static_cast<int>(std::ceil(nreal - 1e-12));
    return std::max(1, n);
}

long gamma_for(int n, double eps) {
    const double a = kRefC1 * std::pow(2.0, -n / 2.0) + kRefC2;
    const double b = kRefC3 * std::pow(2.0, n / 2.0) + kRefC4;
    const double g = (std::log(eps) - b) / a;
    return static_cast<long>(std::floor(g));
}

FockCost fock_encoding_cost(int n, int n_newton, double alpha, double eps, int trotter_halforder) {
    if (n < 1 || n_newton < 0 || alpha <= 0 || eps <= 0 || trotter_halforder < 1)
        throw InvalidArgument("fock_encoding_cost: bad arguments");
    const double nn = n;
    FockCost c;
    c.n_cnot = (270.0 * n_newton + 126.0) * nn * nn + (144.0 + 228.0 * n_newton) * nn -
               12.0 * n_newton - 22.0;
    const double N = std::ldexp(1.0, n);
    const double k = trotter_halforder;
    c.n_exp = std::ceil(3.0 * N * alpha * std::pow(25.0 / 3.0, k) *
                        std::pow(2.0 * alpha * N / eps, 1.0 / (2.0 * k)));
    return c;
}

double advantage_boundary(int n) {
    if (n < 1) throw InvalidArgument("advantage_boundary: n must be >= 1");
    return 2.0 * n * n + 2.0 * n;
}

double state_distance(const std::vector<cplx>& reference, const std::vector<cplx>& out,
                      bool align_phase, double* phase_correction) {
    if (reference.size() != out.size()) throw InvalidArgument("state_distance: size mismatch");
    cplx rot = 1.0;
    if (align_phase) {
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            const double w = std::abs(reference[i]);
            if (w > best) {
                best = w;
                imax = i;
            }
        }
        if (best > 0.0 && std::abs(out[imax]) > 0.0) {
            rot = (reference[imax] / out[imax]);
            rot /= std::abs(rot);
        }
    }
    if (phase_correction) *phase_correction = std::arg(rot);
    double s = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) s += std::norm(reference[i] - rot * out[i]);
    return std::sqrt(s);
}

namespace {

FockState oracle_input_for(const HybridGate& gate, int k, const FockOracle& oracle) {
    const bool two_mode =
        gate.kind == HybridGate::Kind::BS || gate.kind == HybridGate::Kind::CBS;
    return two_mode ? FockState::two_mode(oracle.cutoff(), k, 0)
                    : FockState::single(oracle.cutoff(), k);
}

RegisterLayout layout_for(const HybridGate& gate, const GridSpec& grid) {
    RegisterLayout lay;
    lay.qubits_per_mode = grid.n;
    lay.modes = (gate.kind == HybridGate::Kind::BS || gate.kind == HybridGate::Kind::CBS) ? 2 : 1;
    lay.dv_qubits = 0;
    return lay;
}

} // namespace

double gate_error_fock(const HybridGate& gate, int k, const GridSpec& grid,
                       const FockOracle& oracle) {
    const RegisterLayout lay = layout_for(gate, grid);
    FockState in = oracle_input_for(gate, k, oracle);
    FockState ref = oracle.apply(gate, in);
    auto ref_enc = oracle.reference_wavefunction(ref, grid);

    std::vector<std::vector<cplx>> mode_vecs;
    mode_vecs.push_back(encode_fock(k, grid));
    if (lay.modes == 2) mode_vecs.push_back(encode_fock(0, grid));
    StateVector sv = StateVector::from_mode_vectors(lay, mode_vecs);
    CompiledCircuit circ = compile_gate(gate, grid, lay);
    run_circuit(circ, sv, grid);
    // tracked global phase makes alignment a no-op up to fp; keep it off so the
    // metric stays the raw phase-sensitive norm of the definition
    return state_distance(ref_enc, sv.amplitudes(), false);
}

std::vector<std::vector<double>> qft_intermediate_distributions(const HybridGate& gate,
                                                                const FockState& input,
                                                                const FockOracle& oracle) {
    using K = HybridGate::Kind;
    std::vector<std::vector<double>> out;
    auto push1 = [&](const Vec& v) {
        FockState s = FockState::single_coeffs(v);
        out.push_back(s.mode_distribution(0));
    };
    switch (gate.kind) {
        case K::D: {
            const double tp = -std::sqrt(2.0) * gate.alpha.real();
            if (tp == 0.0) break;
            push1(input.c);
            push1(oracle.exp_p(tp, input.c));
            break;
        }
        case K::R: {
            const AngleSplit sp = split_angle(gate.param, AngleFamily::rotation);
            Vec v = input.c;
            if (sp.delta != 0.0) {
                const double tq = -std::tan(sp.delta / 2.0) / 2.0;
                const double tp = -std::sin(sp.delta) / 2.0;
                v = oracle.exp_q2(tq, v);
                push1(v);
                v = oracle.exp_p2(tp, v);
                push1(v);
                v = oracle.exp_q2(tq, v);
            }
            if (std::abs(sp.steps) % 2 == 1) push1(v);
            break;
        }
        case K::S: {
            if (gate.param == 0.0) break;
            const ShearCoefficients mu = shear_coefficients(gate.param);
            Vec v = input.c;
            push1(v);
            v = oracle.exp_p2(mu.mu1 / 2.0, v);
            push1(v);
            v = oracle.exp_q2(mu.mu2 / 2.0, v);
            push1(v);
            v = oracle.exp_p2(mu.mu3 / 2.0, v);
            push1(v);
            break;
        }
        case K::BS: {
            const AngleSplit sp = split_angle(gate.param, AngleFamily::beamsplitter);
            Vec v = input.c;
            auto push2 = [&](const Vec& w) {
                FockState s;
                s.c = w;
                s.dim = input.dim;
                s.modes = 2;
                out.push_back(s.mode_distribution(0));
                out.push_back(s.mode_distribution(1));
            };
            if (sp.delta != 0.0) {
                const double t1 = -std::tan(sp.delta / 4.0);
                const double t2 = -std::sin(sp.delta / 2.0);
                v = oracle.exp_q1q2(t1, v);
                push2(v);
                v = oracle.exp_p1p2(t2, v);
                push2(v);
                v = oracle.exp_q1q2(t1, v);
            }
            if (std::abs(sp.steps) % 2 == 1) {
                v = oracle.swap_modes(v);
                push2(v);
            }
            break;
        }
        default:
            throw InvalidArgument("qft_intermediate_distributions: unsupported gate");
    }
    return out;
}

namespace {
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace

std::string qft_error_csv(const std::vector<QftErrorPoint>& pts) {
    std::string s = "n,k,epsilon\n";
    for (const auto& p : pts)
        s += std::to_string(p.n) + "," + std::to_string(p.k) + "," + fmt(p.eps) + "\n";
    return s;
}

std::string gate_error_csv(const std::vector<GateErrorPoint>& pts) {
    std::string s = "gate,n,k,epsilon\n";
    for (const auto& p : pts)
        s += p.gate + "," + std::to_string(p.n) + "," + std::to_string(p.k) + "," + fmt(p.eps) +
             "\n";
    return s;
}

std::string advantage_csv(int nmax, double eps) {
    std::string s = "n,gamma_cutoff,tau_ratio\n";
    for (int n = 1; n <= nmax; ++n)
        s += std::to_string(n) + "," + std::to_string(gamma_for(n, eps)) + "," +
             fmt(advantage_boundary(n)) + "\n";
    return s;
}

} // namespace cvdv
