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

#include "cvdv/grid.hpp"

#include <cmath>

namespace cvdv {

GridSpec GridSpec::make(int qubits) {
    if (qubits < 1 || qubits > 26)
        throw InvalidArgument("GridSpec: qubit count must be in [1, 26], got " + std::to_string(qubits));
    GridSpec g;
    g.n = qubits;
    g.N = std::size_t{1} << qubits;
    g.lambda = std::sqrt(2.0 * kPi / static_cast<double>(g.N));
    return g;
}

double GridSpec::shifted_index(std::size_t j) const {
    if (j >= N) throw InvalidArgument("grid index out of range");
    return static_cast<double>(j) - 0.5 * static_cast<double>(N - 1);
}

double GridSpec::position(std::size_t j) const { return lambda * shifted_index(j); }

namespace {

// Recurrence state (mantissa, binary exponent); value = ldexp(m, e).
struct Scaled {
    double m = 0.0;
    int e = 0;
    double value() const {
        if (m == 0.0) return 0.0;
        if (e < -1074) return 0.0;
        if (e > 1023) return m > 0 ? HUGE_VAL : -HUGE_VAL;
        return std::ldexp(m, e);
    }
};

} // namespace

void hermite_column(int kmax, double x, double* out) {
    // seed psi_0 = pi^{-1/4} e^{-x^2/2}, kept as (mantissa, exponent)
    const double lp = -0.5 * x * x - 0.25 * std::log(kPi);
    Scaled cur, prev;
    cur.e = static_cast<int>(std::floor(lp / std::log(2.0)));
    cur.m = std::exp(lp - cur.e * std::log(2.0));
    prev = Scaled{0.0, cur.e};
    out[0] = cur.value();
    for (int k = 0; k < kmax; ++k) {
        const int emax = std::max(prev.e, cur.e);
        const double a = (cur.e - emax > -1074) ? std::ldexp(cur.m, cur.e - emax) : 0.0;
        const double b = (prev.e - emax > -1074) ? std::ldexp(prev.m, prev.e - emax) : 0.0;
        double next = x * std::sqrt(2.0 / (k + 1)) * a - std::sqrt(static_cast<double>(k) / (k + 1)) * b;
        Scaled nxt{next, emax};
        if (next != 0.0) {
            int ex = 0;
            nxt.m = std::frexp(next, &ex);
            nxt.e = emax + ex;
        }
        prev = cur;
        cur = nxt;
        out[k + 1] = cur.value();
    }
}

double hermite_psi(int k, double x) {
    if (k < 0) throw InvalidArgument("hermite_psi: negative Fock index");
    std::vector<double> col(static_cast<std::size_t>(k) + 1);
    hermite_column(k, x, col.data());
    return col[static_cast<std::size_t>(k)];
}

Wavefunction fock_wavefunction(int k, Wavefunction::Basis basis) {
    if (k < 0) throw InvalidArgument("fock_wavefunction: negative Fock index");
    cplx phase = 1.0;
    if (basis == Wavefunction::Basis::momentum) {
        static const cplx mi(0.0, -1.0);
        phase = std::pow(mi, k % 4);
    }
    return Wavefunction{[k, phase](double x) { return phase * hermite_psi(k, x); }, basis};
}

Wavefunction coherent_wavefunction(cplx alpha) {
    const double re = alpha.real(), im = alpha.imag();
    return Wavefunction{[re, im](double q) {
        const double c = std::sqrt(2.0);
        const double g = q - c * re;
        return std::pow(kPi, -0.25) * std::exp(cplx(-0.5 * g * g, c * im * q - im * re));
    }, Wavefunction::Basis::position};
}

std::vector<cplx> encode(const Wavefunction& wf, const GridSpec& grid) {
    std::vector<cplx> out(grid.N);
    const double s = std::sqrt(grid.lambda);
    for (std::size_t j = 0; j < grid.N; ++j) {
        const cplx v = wf.eval(grid.position(j));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw EncodingError("encode: non-finite sample at grid index " + std::to_string(j));
        out[j] = s * v;
    }
    return out;
}

std::vector<cplx> encode_fock(int k, const GridSpec& grid) {
    if (k < 0) throw InvalidArgument("encode_fock: negative Fock index");
    std::vector<double> col(static_cast<std::size_t>(k) + 1);
    std::vector<cplx> out(grid.N);
    const double s = std::sqrt(grid.lambda);
    for (std::size_t j = 0; j < grid.N; ++j) {
        hermite_column(k, grid.position(j), col.data());
        out[j] = s * col[static_cast<std::size_t>(k)];
    }
    return out;
}

double norm_deficit(const std::vector<cplx>& enc) { return 1.0 - norm2(enc); }

std::vector<cplx> shifted_qft_matrix(const GridSpec& grid) {
    const std::size_t N = grid.N;
    std::vector<cplx> F(N * N);
    const double inv = 1.0 / std::sqrt(static_cast<double>(N));
    const double lam2 = grid.lambda * grid.lambda;
    for (std::size_t k = 0; k < N; ++k) {
        const double kt = grid.shifted_index(k);
        for (std::size_t j = 0; j < N; ++j) {
            const double jt = grid.shifted_index(j);
            F[k * N + j] = std::polar(inv, -lam2 * jt * kt);
        }
    }
    return F;
}

std::vector<cplx> apply_shifted_qft_dense(const std::vector<cplx>& v, const GridSpec& grid,
                                          bool inverse) {
    if (v.size() != grid.N) throw InvalidArgument("apply_shifted_qft_dense: size mismatch");
    const std::size_t N = grid.N;
    static thread_local int cached_n = -1;
    static thread_local std::vector<cplx> cached;
    if (cached_n != grid.n) {
        cached = shifted_qft_matrix(grid);
        cached_n = grid.n;
    }
    std::vector<cplx> y(N);
    for (std::size_t k = 0; k < N; ++k) {
        cplx acc = 0.0;
        const cplx* row = cached.data() + k * N;
        if (!inverse) {
            for (std::size_t j = 0; j < N; ++j) acc += row[j] * v[j];
        } else {
            for (std::size_t j = 0; j < N; ++j) acc += std::conj(row[j]) * v[j];
        }
        y[k] = acc;
    }
    return y;
}

} // namespace cvdv
