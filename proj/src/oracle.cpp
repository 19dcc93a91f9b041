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

#include "cvdv/oracle.hpp"

#include <cmath>

namespace cvdv {

FockState FockState::single(int dim, int k) {
    if (k < 0 || k >= dim) throw InvalidArgument("FockState::single: level out of range");
    FockState s;
    s.c = Vec::Zero(dim);
    s.c[k] = 1.0;
    s.dim = dim;
    return s;
}

FockState FockState::single_coeffs(Vec coeffs) {
    FockState s;
    s.dim = static_cast<int>(coeffs.size());
    s.c = std::move(coeffs);
    return s;
}

FockState FockState::two_mode(int dim, int k0, int k1) {
    if (k0 < 0 || k0 >= dim || k1 < 0 || k1 >= dim)
        throw InvalidArgument("FockState::two_mode: level out of range");
    FockState s;
    s.c = Vec::Zero(static_cast<long>(dim) * dim);
    s.c[k0 + static_cast<long>(dim) * k1] = 1.0;
    s.dim = dim;
    s.modes = 2;
    return s;
}

FockState FockState::with_control(cplx c0, cplx c1) const {
    if (conditional) throw InvalidArgument("with_control: already conditional");
    FockState s = *this;
    const long m = c.size();
    s.c = Vec(2 * m);
    s.c.head(m) = c0 * c;
    s.c.tail(m) = c1 * c;
    s.conditional = true;
    return s;
}

FockState FockState::project_control(int bit) const {
    if (!conditional) throw InvalidArgument("project_control: no control present");
    const long m = c.size() / 2;
    FockState s;
    s.c = bit ? Vec(c.tail(m)) : Vec(c.head(m));
    s.dim = dim;
    s.modes = modes;
    return s;
}

double FockState::top_occupancy(double fraction) const {
    const long m = conditional ? c.size() / 2 : c.size();
    const int lo = static_cast<int>(std::floor(dim * (1.0 - fraction)));
    double occ = 0.0;
    for (long i = 0; i < c.size(); ++i) {
        const long fock = i % m;
        const int k0 = static_cast<int>(fock % dim);
        const int k1 = modes == 2 ? static_cast<int>(fock / dim) : 0;
        if (k0 >= lo || k1 >= lo) occ += std::norm(c[i]);
    }
    return occ;
}

std::vector<double> FockState::mode_distribution(int mode) const {
    const long m = conditional ? c.size() / 2 : c.size();
    std::vector<double> probs(static_cast<std::size_t>(dim), 0.0);
    for (long i = 0; i < c.size(); ++i) {
        const long fock = i % m;
        const int k = (mode == 0) ? static_cast<int>(fock % dim) : static_cast<int>(fock / dim);
        probs[static_cast<std::size_t>(k)] += std::norm(c[i]);
    }
    return probs;
}

FockOracle::FockOracle(int cutoff) : dim_(cutoff) {
    if (cutoff < 2 || cutoff > 4096) throw InvalidArgument("FockOracle: bad cutoff");
    a_ = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (int k = 1; k < dim_; ++k) a_(k - 1, k) = std::sqrt(static_cast<double>(k));
    ad_ = a_.adjoint();
}

const FockOracle::EigSys& FockOracle::sys_q() const {
    if (!q_) {
        Eigen::MatrixXcd q = (a_ + ad_) / std::sqrt(2.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q);
        q_ = std::make_unique<EigSys>(EigSys{es.eigenvectors(), es.eigenvalues()});
    }
    return *q_;
}

const FockOracle::EigSys& FockOracle::sys_p() const {
    if (!p_) {
        Eigen::MatrixXcd p = (a_ - ad_) / cplx(0.0, std::sqrt(2.0));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p);
        p_ = std::make_unique<EigSys>(EigSys{es.eigenvectors(), es.eigenvalues()});
    }
    return *p_;
}

const FockOracle::EigSys& FockOracle::sys_q2() const {
    if (!q2_) {
        Eigen::MatrixXcd q = (a_ + ad_) / std::sqrt(2.0);
        Eigen::MatrixXcd m = q * q;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        q2_ = std::make_unique<EigSys>(EigSys{es.eigenvectors(), es.eigenvalues()});
    }
    return *q2_;
}

const FockOracle::EigSys& FockOracle::sys_p2() const {
    if (!p2_) {
        Eigen::MatrixXcd p = (a_ - ad_) / cplx(0.0, std::sqrt(2.0));
        Eigen::MatrixXcd m = p * p;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        p2_ = std::make_unique<EigSys>(EigSys{es.eigenvectors(), es.eigenvalues()});
    }
    return *p2_;
}

const FockOracle::EigSys& FockOracle::sys_sq() const {
    if (!sq_) {
        Eigen::MatrixXcd q = (a_ + ad_) / std::sqrt(2.0);
        Eigen::MatrixXcd p = (a_ - ad_) / cplx(0.0, std::sqrt(2.0));
        Eigen::MatrixXcd m = q * p + p * q; // S(r) = e^{i (r/2) (qp+pq)}
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        sq_ = std::make_unique<EigSys>(EigSys{es.eigenvectors(), es.eigenvalues()});
    }
    return *sq_;
}

Vec FockOracle::apply_exp(const EigSys& s, double scale, const Vec& v) const {
    Vec w = s.vecs.adjoint() * v;
    for (long i = 0; i < w.size(); ++i) w[i] *= std::polar(1.0, scale * s.vals[i]);
    return s.vecs * w;
}

Vec FockOracle::exp_q(double t, const Vec& v) const { return apply_exp(sys_q(), t, v); }
Vec FockOracle::exp_p(double t, const Vec& v) const { return apply_exp(sys_p(), t, v); }
Vec FockOracle::exp_q2(double t, const Vec& v) const { return apply_exp(sys_q2(), t, v); }
Vec FockOracle::exp_p2(double t, const Vec& v) const { return apply_exp(sys_p2(), t, v); }

Vec FockOracle::displacement(cplx alpha, const Vec& v) const {
    // D(a) = e^{-i Im Re} e^{i sqrt2 Im(a) q} e^{-i sqrt2 Re(a) p}
    Vec w = exp_p(-std::sqrt(2.0) * alpha.real(), v);
    w = exp_q(std::sqrt(2.0) * alpha.imag(), w);
    return std::polar(1.0, -alpha.imag() * alpha.real()) * w;
}

Vec FockOracle::rotation(double theta, const Vec& v) const {
    Vec w = v;
    for (long k = 0; k < w.size(); ++k)
        w[k] *= std::polar(1.0, -theta * (static_cast<double>(k) + 0.5));
    return w;
}

Vec FockOracle::number_phase(double phi, const Vec& v) const {
    Vec w = v;
    for (long k = 0; k < w.size(); ++k) w[k] *= std::polar(1.0, phi * static_cast<double>(k));
    return w;
}

Vec FockOracle::squeezing(double r, const Vec& v) const { return apply_exp(sys_sq(), r / 2.0, v); }

Vec FockOracle::beamsplitter(double theta, const Vec& v) const {
    // generator a1+ a2 + a1 a2+ is block diagonal over total photon number
    const int D = dim_;
    if (v.size() != static_cast<long>(D) * D) throw InvalidArgument("beamsplitter: bad input size");
    Vec out = Vec::Zero(v.size());
    for (int M = 0; M <= 2 * (D - 1); ++M) {
        const int k_lo = std::max(0, M - (D - 1));
        const int k_hi = std::min(M, D - 1);
        const int len = k_hi - k_lo + 1;
        if (len <= 0) continue;
        // basis |k0, M-k0>, k0 = k_lo..k_hi; G tridiagonal, real symmetric
        Eigen::MatrixXd G = Eigen::MatrixXd::Zero(len, len);
        for (int i = 0; i + 1 < len; ++i) {
            const int k0 = k_lo + i;
            // <k0+1, M-k0-1| a1+ a2 |k0, M-k0> = sqrt((k0+1)(M-k0))
            G(i + 1, i) = G(i, i + 1) =
                std::sqrt(static_cast<double>(k0 + 1) * static_cast<double>(M - k0));
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
        Eigen::VectorXcd seg(len);
        for (int i = 0; i < len; ++i) {
            const int k0 = k_lo + i;
            seg[i] = v[k0 + static_cast<long>(D) * (M - k0)];
        }
        Eigen::VectorXcd w = es.eigenvectors().transpose() * seg;
        for (int i = 0; i < len; ++i) w[i] *= std::polar(1.0, -0.5 * theta * es.eigenvalues()[i]);
        seg = es.eigenvectors() * w;
        for (int i = 0; i < len; ++i) {
            const int k0 = k_lo + i;
            out[k0 + static_cast<long>(D) * (M - k0)] = seg[i];
        }
    }
    return out;
}

Vec FockOracle::swap_modes(const Vec& v) const {
    const int D = dim_;
    Vec out(v.size());
    for (int k0 = 0; k0 < D; ++k0)
        for (int k1 = 0; k1 < D; ++k1)
            out[k1 + static_cast<long>(D) * k0] = v[k0 + static_cast<long>(D) * k1];
    return out;
}

namespace {

// y = (q x I) (I x q) v  with q tridiagonal; modes: index k0 + D*k1
void apply_q1q2(const Vec& v, int D, Vec& out) {
    auto qval = [](int from, int to) -> double {
        // <to| q |from>, q = (a + a+)/sqrt2
        if (to == from - 1) return std::sqrt(static_cast<double>(from) / 2.0);
        if (to == from + 1) return std::sqrt(static_cast<double>(from + 1) / 2.0);
        return 0.0;
    };
    out.setZero();
    for (int k0 = 0; k0 < D; ++k0) {
        for (int k1 = 0; k1 < D; ++k1) {
            const cplx amp = v[k0 + static_cast<long>(D) * k1];
            if (amp == cplx(0.0)) continue;
            for (int d0 : {-1, 1}) {
                const int j0 = k0 + d0;
                if (j0 < 0 || j0 >= D) continue;
                const double w0 = qval(k0, j0);
                for (int d1 : {-1, 1}) {
                    const int j1 = k1 + d1;
                    if (j1 < 0 || j1 >= D) continue;
                    out[j0 + static_cast<long>(D) * j1] += w0 * qval(k1, j1) * amp;
                }
            }
        }
    }
}

// p = (a - a+)/(i sqrt2): <k-1|p|k> = sqrt(k/2)/i * ... handled via phases:
// p = U q U+ with U = e^{-i pi/2 n} per mode. We reuse that identity.
} // namespace

Vec FockOracle::lanczos_exp(double t, const Vec& v, char which) const {
    // e^{i t Q1 Q2} v by Lanczos with time splitting; 'which' is q or p.
    const int D = dim_;
    Vec x = v;
    if (which == 'p') {
        // p1 p2 = (F1 F2) q1 q2 (F1 F2)^dag with F = e^{-i pi/2 n}:
        // conjugate the state by number phases instead of building p matrices.
        Vec w = x;
        for (int k0 = 0; k0 < D; ++k0)
            for (int k1 = 0; k1 < D; ++k1)
                w[k0 + static_cast<long>(D) * k1] *=
                    std::polar(1.0, kPi / 2.0 * static_cast<double>(k0 + k1));
        x = w;
    }
    const double tnorm = std::abs(t) * static_cast<double>(D); // ||q1 q2|| <= ~D
    const int steps = std::max(1, static_cast<int>(std::ceil(tnorm / 8.0)));
    const double dt = t / steps;
    const int mmax = 40;
    Vec scratch(x.size());
    for (int s = 0; s < steps; ++s) {
        // Lanczos basis
        std::vector<Vec> basis;
        std::vector<double> alpha, beta;
        double nrm = x.norm();
        if (nrm == 0.0) break;
        basis.push_back(x / nrm);
        for (int m = 0; m < mmax; ++m) {
            apply_q1q2(basis.back(), D, scratch);
            Vec w = scratch;
            const double al = std::real(basis.back().dot(w));
            w -= al * basis.back();
            if (m > 0) w -= beta.back() * basis[basis.size() - 2];
            // full reorthogonalization for stability
            for (const auto& b : basis) w -= b.dot(w) * b;
            alpha.push_back(al);
            const double be = w.norm();
            if (be < 1e-13) break;
            beta.push_back(be);
            basis.push_back(w / be);
        }
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            T(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(m);
        e1[0] = nrm;
        Eigen::VectorXcd y = es.eigenvectors().transpose() * e1;
        for (int i = 0; i < m; ++i) y[i] *= std::polar(1.0, dt * es.eigenvalues()[i]);
        y = es.eigenvectors() * y;
        Vec xn = Vec::Zero(x.size());
        for (int i = 0; i < m; ++i) xn += y[i] * basis[static_cast<std::size_t>(i)];
        x = xn;
    }
    if (which == 'p') {
        for (int k0 = 0; k0 < D; ++k0)
            for (int k1 = 0; k1 < D; ++k1)
                x[k0 + static_cast<long>(D) * k1] *=
                    std::polar(1.0, -kPi / 2.0 * static_cast<double>(k0 + k1));
    }
    return x;
}

Vec FockOracle::exp_q1q2(double t, const Vec& v) const { return lanczos_exp(t, v, 'q'); }
Vec FockOracle::exp_p1p2(double t, const Vec& v) const { return lanczos_exp(t, v, 'p'); }

namespace {
FockState check_trunc(FockState s) {
    if (s.top_occupancy() > 1e-14) s.truncation_flag = true;
    return s;
}
} // namespace

FockState FockOracle::apply(const HybridGate& gate, const FockState& in) const {
    using K = HybridGate::Kind;
    FockState out = in;
    auto unary = [&](auto&& f) {
        if (in.conditional) throw InvalidArgument("oracle: unconditional gate on conditional state");
        out.c = f(in.c);
    };
    auto conditional = [&](auto&& f_plus, auto&& f_minus) {
        if (!in.conditional) throw InvalidArgument("oracle: conditional gate needs a control");
        const long m = in.c.size() / 2;
        out.c.head(m) = f_plus(Vec(in.c.head(m)));
        out.c.tail(m) = f_minus(Vec(in.c.tail(m)));
    };
    switch (gate.kind) {
        case K::D: unary([&](const Vec& v) { return displacement(gate.alpha, v); }); break;
        case K::R: unary([&](const Vec& v) { return rotation(gate.param, v); }); break;
        case K::S: unary([&](const Vec& v) { return squeezing(gate.param, v); }); break;
        case K::BS: unary([&](const Vec& v) { return beamsplitter(gate.param, v); }); break;
        case K::CD:
            conditional([&](const Vec& v) { return displacement(gate.alpha, v); },
                        [&](const Vec& v) { return displacement(-gate.alpha, v); });
            break;
        case K::CR:
            conditional([&](const Vec& v) { return rotation(gate.param, v); },
                        [&](const Vec& v) { return rotation(-gate.param, v); });
            break;
        case K::CS:
            conditional([&](const Vec& v) { return squeezing(gate.param, v); },
                        [&](const Vec& v) { return squeezing(-gate.param, v); });
            break;
        case K::CBS:
            conditional([&](const Vec& v) { return beamsplitter(gate.param, v); },
                        [&](const Vec& v) { return beamsplitter(-gate.param, v); });
            break;
        case K::Fourier:
            unary([&](const Vec& v) { return number_phase((gate.inverse ? 1.0 : -1.0) * kPi / 2.0, v); });
            break;
        case K::Parity: unary([&](const Vec& v) { return number_phase(kPi, v); }); break;
        case K::ModeSwap: unary([&](const Vec& v) { return swap_modes(v); }); break;
        default: throw InvalidArgument("oracle: unsupported gate kind");
    }
    return check_trunc(std::move(out));
}

Vec FockOracle::coherent_coeffs(cplx alpha, int dim) {
    Vec c(dim);
    const double la = std::abs(alpha) > 0 ? std::log(std::abs(alpha)) : 0.0;
    const double ph = std::arg(alpha);
    for (int k = 0; k < dim; ++k) {
        if (alpha == cplx(0.0)) {
            c[k] = (k == 0) ? 1.0 : 0.0;
            continue;
        }
        const double logmag = -0.5 * std::norm(alpha) + k * la - 0.5 * std::lgamma(k + 1.0);
        c[k] = std::polar(std::exp(logmag), ph * k);
    }
    return c;
}

std::vector<cplx> FockOracle::reference_wavefunction(const FockState& state,
                                                     const GridSpec& grid) const {
    if (state.conditional)
        throw InvalidArgument("reference_wavefunction: project the control first");
    const int D = state.dim;
    const std::size_t N = grid.N;
    std::vector<double> table(N * static_cast<std::size_t>(D));
    std::vector<double> col(static_cast<std::size_t>(D));
    for (std::size_t j = 0; j < N; ++j) {
        hermite_column(D - 1, grid.position(j), col.data());
        for (int k = 0; k < D; ++k) table[j * D + k] = col[static_cast<std::size_t>(k)];
    }
    const double s = std::sqrt(grid.lambda);
    if (state.modes == 1) {
        std::vector<cplx> out(N, 0.0);
        for (std::size_t j = 0; j < N; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < D; ++k) acc += state.c[k] * table[j * D + k];
            out[j] = s * acc;
        }
        return out;
    }
    // two modes: out[j0 + N*j1] = lambda * sum c_{k0,k1} psi_k0(x_j0) psi_k1(x_j1)
    std::vector<cplx> out(N * N, 0.0);
    // tmp[j0][k1] = sum_k0 c[k0,k1] psi_k0(x_j0)
    std::vector<cplx> tmp(N * static_cast<std::size_t>(D), 0.0);
    for (std::size_t j0 = 0; j0 < N; ++j0)
        for (int k1 = 0; k1 < D; ++k1) {
            cplx acc = 0.0;
            for (int k0 = 0; k0 < D; ++k0)
                acc += state.c[k0 + static_cast<long>(D) * k1] * table[j0 * D + k0];
            tmp[j0 * D + k1] = acc;
        }
    for (std::size_t j1 = 0; j1 < N; ++j1)
        for (std::size_t j0 = 0; j0 < N; ++j0) {
            cplx acc = 0.0;
            for (int k1 = 0; k1 < D; ++k1) acc += tmp[j0 * D + k1] * table[j1 * D + k1];
            out[j0 + N * j1] = s * s * acc;
        }
    return out;
}

} // namespace cvdv
