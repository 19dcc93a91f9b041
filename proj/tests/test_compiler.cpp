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

#include <doctest.h>

#include <cmath>
#include <fstream>

#include "cvdv/error_lab.hpp"

using namespace cvdv;

namespace {

RegisterLayout one_mode(int n, int dv = 0) { return RegisterLayout{1, n, dv}; }
RegisterLayout two_mode(int n, int dv = 0) { return RegisterLayout{2, n, dv}; }

// 2x2 symplectic factors acting on (q, p)^T
struct M2 {
    double a, b, c, d;
    M2 operator*(const M2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};
M2 shear_q(double c) { return {1, 0, c, 1}; }   // e^{i c/2 q^2}
M2 shear_p(double c) { return {1, -c, 0, 1}; }  // e^{i c/2 p^2}

} // namespace

TEST_CASE("angle splitting") {
    auto sp = split_angle(kPi / 4.0, AngleFamily::rotation);
    CHECK(sp.theta0 == 0.0);
    CHECK(sp.delta == doctest::Approx(kPi / 4.0));

    sp = split_angle(3.0 * kPi / 4.0, AngleFamily::rotation);
    CHECK(sp.theta0 == doctest::Approx(kPi / 2.0));
    CHECK(std::abs(sp.delta) <= kPi / 4.0 + 1e-15);

    sp = split_angle(kPi, AngleFamily::beamsplitter);
    CHECK(sp.steps == 1);
    CHECK(sp.delta == 0.0);

    sp = split_angle(-2.9, AngleFamily::rotation);
    CHECK(sp.theta0 + sp.delta == doctest::Approx(-2.9));
    CHECK(std::abs(sp.delta) <= kPi / 4.0 + 1e-15);
}

TEST_CASE("shear coefficients satisfy the closed forms and the symplectic identity") {
    for (double r : {1.0, 0.3, -0.7, -2.0, 0.05}) {
        const auto mu = shear_coefficients(r);
        const double sgn = r >= 0 ? 1.0 : -1.0;
        const double root = std::sqrt(std::abs(std::exp(r) - 1.0));
        CHECK(mu.mu1 == doctest::Approx(-std::exp(r / 2.0) * root).epsilon(1e-12));
        CHECK(mu.mu2 == doctest::Approx(sgn * std::exp(-r / 2.0) * root).epsilon(1e-12));
        CHECK(mu.mu3 == doctest::Approx(std::exp(-r / 2.0) * root).epsilon(1e-12));
        CHECK(mu.mu4 == doctest::Approx(-sgn * std::exp(r / 2.0) * root).epsilon(1e-12));
        const M2 m = shear_q(mu.mu4) * shear_p(mu.mu3) * shear_q(mu.mu2) * shear_p(mu.mu1);
        CHECK(m.a == doctest::Approx(std::exp(-r)).epsilon(1e-12));
        CHECK(std::abs(m.b) < 1e-12);
        CHECK(std::abs(m.c) < 1e-12);
        CHECK(m.d == doctest::Approx(std::exp(r)).epsilon(1e-12));
    }
}

TEST_CASE("rotation shear product reproduces the rotation matrix") {
    const double th = 0.3;
    const M2 m = shear_q(-std::tan(th / 2)) * shear_p(-std::sin(th)) * shear_q(-std::tan(th / 2));
    CHECK(m.a == doctest::Approx(std::cos(th)).epsilon(1e-14));
    CHECK(m.b == doctest::Approx(std::sin(th)).epsilon(1e-14));
    CHECK(m.c == doctest::Approx(-std::sin(th)).epsilon(1e-14));
    CHECK(m.d == doctest::Approx(std::cos(th)).epsilon(1e-14));
}

TEST_CASE("displacement counts match the table row") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        auto c = compile_displacement(cplx(2.0, 1.0), g, one_mode(n), 0);
        const auto k = c.counts();
        CHECK(k.qft == 2);
        CHECK(k.rz == 2 * n);
        CHECK(k.cnot == 0);
        CHECK(k.czrot == 0);
        // expansion: 2 n(n-1) CNOT from the two QFT units
        CHECK(count_resources(c).expanded.cnot == 2 * n * (n - 1));
    }
    // n=7 expands to 84 CNOTs
    const GridSpec g7 = GridSpec::make(7);
    auto c7 = compile_displacement(cplx(2.0, 1.0), g7, one_mode(7), 0);
    CHECK(count_resources(c7).expanded.cnot == 84);
    // pure momentum kick is position-diagonal: no QFT
    auto ci = compile_displacement(cplx(0.0, 0.7), g7, one_mode(7), 0);
    CHECK(ci.counts().qft == 0);
    CHECK(ci.counts().rz == 7);
    // zero displacement compiles to nothing
    auto c0 = compile_displacement(cplx(0.0, 0.0), g7, one_mode(7), 0);
    CHECK(c0.gates.empty());
    CHECK(c0.global_phase == 0.0);
}

TEST_CASE("rotation counts match the table row") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        auto c = compile_rotation(0.7, g, one_mode(n), 0);
        const auto k = c.counts();
        CHECK(k.qft == 2);
        CHECK(k.czrot == 3 * n * (n - 1) / 2);
        CHECK(k.x == 0);
    }
}

TEST_CASE("rotation shortcuts") {
    const int n = 5;
    const GridSpec g = GridSpec::make(n);
    auto c = compile_rotation(kPi / 2.0, g, one_mode(n), 0);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::Qft);
    CHECK_FALSE(c.gates[0].inverse);
    CHECK(c.global_phase == doctest::Approx(-kPi / 4.0));

    c = compile_rotation(kPi, g, one_mode(n), 0);
    CHECK(c.counts().x == n);
    CHECK(c.counts().qft == 0);
    CHECK(c.global_phase == doctest::Approx(-kPi / 2.0));

    c = compile_rotation(-kPi / 2.0, g, one_mode(n), 0);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].inverse);

    c = compile_rotation(0.0, g, one_mode(n), 0);
    CHECK(c.gates.empty());
}

TEST_CASE("squeezing counts match the table row") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        auto c = compile_squeezing(1.0, g, one_mode(n), 0);
        const auto k = c.counts();
        CHECK(k.qft == 4);
        CHECK(k.czrot == 2 * n * (n - 1));
    }
    const GridSpec g6 = GridSpec::make(6);
    auto c6 = compile_squeezing(1.0, g6, one_mode(6), 0);
    CHECK(c6.counts().czrot == 60);
    auto c0 = compile_squeezing(0.0, g6, one_mode(6), 0);
    CHECK(c0.gates.empty());
}

TEST_CASE("beam splitter counts and shortcuts") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        auto c = compile_beamsplitter(kPi / 2.0, g, two_mode(n), 0, 1);
        const auto k = c.counts();
        CHECK(k.qft == 4);
        CHECK(k.czrot == 3 * n * n);
    }
    const int n = 5;
    const GridSpec g = GridSpec::make(n);
    CHECK(compile_beamsplitter(kPi / 2.0, g, two_mode(n), 0, 1).counts().czrot == 75);

    auto cpi = compile_beamsplitter(kPi, g, two_mode(n), 0, 1);
    CHECK(cpi.counts().qft == 2);
    CHECK(cpi.counts().swap_ == n);
    CHECK(cpi.counts().czrot == 0);
    CHECK(cpi.global_phase == 0.0);

    auto c2pi = compile_beamsplitter(2.0 * kPi, g, two_mode(n), 0, 1);
    CHECK(c2pi.counts().x == 2 * n);
    CHECK(c2pi.counts().qft == 0);

    CHECK_THROWS_AS(compile_beamsplitter(1.0, g, two_mode(n), 0, 0), InvalidArgument);
}

TEST_CASE("conditional displacement forms") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        const auto lay = one_mode(n, 1);
        const int ctrl = lay.dv_qubit(0);
        auto sand = compile_conditional_displacement(cplx(0.3, -0.2), g, lay, 0, ctrl);
        CHECK(sand.counts().qft == 2);
        CHECK(sand.counts().rz == 2 * n);
        CHECK(sand.counts().cnot == 2 * n);
        CHECK(sand.counts().czrot == 0);
        auto legs = compile_conditional_displacement(cplx(0.3, -0.2), g, lay, 0, ctrl,
                                                     CdForm::cz_legs);
        CHECK(legs.counts().qft == 2);
        CHECK(legs.counts().czrot == 2 * n);
        CHECK(legs.counts().cnot == 0);
        // the conditional-Z-leg form expands to 2n^2 + 2n CNOTs
        CHECK(count_resources(legs).expanded.cnot == 2 * n * n + 2 * n);
    }
}

TEST_CASE("conditional rotation counts and exact pi shortcut") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        const auto lay = one_mode(n, 1);
        const int ctrl = lay.dv_qubit(0);
        auto c = compile_conditional_rotation(0.7, g, lay, 0, ctrl);
        const auto k = c.counts();
        CHECK(k.qft == 2);
        CHECK(k.czrot == 3 * n * (n - 1) / 2);
        CHECK(k.cnot == 6 * n);
        CHECK(k.rz == 1); // fused control rotation carrying the branch phases
    }
    // CR(pi) is exactly Rz(-pi) on the control and parity on the mode: no
    // entangling gates at all (the conditional-parity claim drops branch phases)
    const int n = 5;
    const GridSpec g = GridSpec::make(n);
    const auto lay = one_mode(n, 1);
    auto c = compile_conditional_rotation(kPi, g, lay, 0, lay.dv_qubit(0));
    CHECK(c.counts().x == n);
    CHECK(c.counts().rz == 1);
    CHECK(c.counts().cnot == 0);
    CHECK(c.counts().qft == 0);
    // CR(pi/2) = Rz(-pi/2) . F . CP
    auto ch = compile_conditional_rotation(kPi / 2.0, g, lay, 0, lay.dv_qubit(0));
    CHECK(ch.counts().qft == 1);
    CHECK(ch.counts().cnot == n);
    CHECK(ch.counts().rz == 1);
}

TEST_CASE("conditional squeezing counts") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        const auto lay = one_mode(n, 1);
        auto c = compile_conditional_squeezing(0.5, g, lay, 0, lay.dv_qubit(0));
        const auto k = c.counts();
        CHECK(k.qft == 4);
        CHECK(k.czrot == 4 * n * (n - 1));
        CHECK(k.cnot == 8 * n);
    }
    const GridSpec g5 = GridSpec::make(5);
    const auto lay5 = one_mode(5, 1);
    auto c5 = compile_conditional_squeezing(0.5, g5, lay5, 0, lay5.dv_qubit(0));
    CHECK(c5.counts().czrot == 80);
    CHECK(c5.counts().cnot == 40);
}

TEST_CASE("conditional beam splitter counts and shortcuts") {
    for (int n = 3; n <= 8; ++n) {
        const GridSpec g = GridSpec::make(n);
        const auto lay = two_mode(n, 1);
        auto c = compile_conditional_beamsplitter(1.0, g, lay, 0, 1, lay.dv_qubit(0));
        const auto k = c.counts();
        CHECK(k.qft == 4);
        CHECK(k.czrot == 3 * n * n);
        CHECK(k.cnot == 6 * n);
    }
    const int n = 4;
    const GridSpec g = GridSpec::make(n);
    const auto lay = two_mode(n, 1);
    auto cpi = compile_conditional_beamsplitter(kPi, g, lay, 0, 1, lay.dv_qubit(0));
    CHECK(cpi.counts().qft == 2);
    CHECK(cpi.counts().swap_ == n);
    CHECK(cpi.counts().cnot == 2 * n);
    auto c2pi = compile_conditional_beamsplitter(2.0 * kPi, g, lay, 0, 1, lay.dv_qubit(0));
    CHECK(c2pi.counts().x == 2 * n);
    CHECK(c2pi.counts().cnot == 0);
}

TEST_CASE("elementary phase layers emit the quoted two-qubit budgets") {
    const int n = 5;
    const GridSpec g = GridSpec::make(n);
    HybridGate cross{HybridGate::Kind::PhaseQQ};
    cross.mode = 0;
    cross.mode2 = 1;
    cross.param = 0.3;
    CHECK(compile_gate(cross, g, two_mode(n)).counts().czrot == 25); // n^2
    HybridGate same{HybridGate::Kind::PhaseQQ};
    same.mode = 0;
    same.mode2 = -1;
    same.param = 0.3;
    CHECK(compile_gate(same, g, one_mode(n)).counts().czrot == 10); // n(n-1)/2
}

TEST_CASE("one QFT unit expands to the quoted cost") {
    const int n = 6;
    CompiledCircuit c;
    c.qubits_per_mode = n;
    ElementaryGate q;
    q.kind = GateKind::Qft;
    q.mode = 0;
    c.gates.push_back(q);
    const auto rep = count_resources(c);
    CHECK(rep.expanded.h == n);
    CHECK(rep.expanded.rz == n * (n - 1) / 2);
    CHECK(rep.expanded.cnot == n * (n - 1));
}

TEST_CASE("QFT unit expansion executes identically to the marker") {
    const int n = 4;
    const GridSpec g = GridSpec::make(n);
    const auto lay = one_mode(n);
    CompiledCircuit c;
    c.qubits_per_mode = n;
    ElementaryGate q;
    q.kind = GateKind::Qft;
    q.mode = 0;
    c.gates.push_back(q);
    q.inverse = true;
    c.gates.push_back(q); // F then F^{-1}, expanded, must be the identity
    auto vec = encode_fock(2, g);
    {
        double nn = std::sqrt(norm2(vec));
        for (auto& z : vec) z /= nn;
    }
    StateVector sv = StateVector::from_mode_vectors(lay, {vec});
    auto expanded = expand_qft_units(c, g, lay);
    CHECK(expanded.counts().qft == 0);
    run_circuit(expanded, sv, g);
    StateVector ref = StateVector::from_mode_vectors(lay, {vec});
    double d = 0.0;
    for (std::size_t i = 0; i < ref.amplitudes().size(); ++i)
        d += std::norm(ref.amplitudes()[i] - sv.amplitudes()[i]);
    CHECK(std::sqrt(d) < 1e-12);
}

TEST_CASE("circuit text export golden") {
    const GridSpec g = GridSpec::make(2);
    auto c = compile_displacement(cplx(0.0, 1.0), g, one_mode(2), 0);
    const std::string got = circuit_to_text(c);
    std::ifstream in(std::string(CVDV_GOLDEN_DIR) + "/disp_imag_n2.txt");
    REQUIRE(in.good());
    std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(got == want);
}

TEST_CASE("circuit json export carries counts") {
    const GridSpec g = GridSpec::make(3);
    auto c = compile_rotation(0.5, g, one_mode(3), 0);
    const std::string j = circuit_to_json(c);
    CHECK(j.find("\"qft\": 2") != std::string::npos);
    CHECK(j.find("\"czrot\": 9") != std::string::npos);
}

TEST_CASE("semantic conformance on random small parameters") {
    // executing the compiled circuit on encoded Fock inputs matches the
    // Fock-basis reference within the table bound k_QFT * eps_F*
    FockOracle oracle1(256);
    FockOracle oracle2(48);
    Rng rng(20250809);
    for (int n : {4, 6}) {
        const GridSpec g = GridSpec::make(n);
        auto pts = qft_error_sweep({n});
        ErrorFit fit = fit_per_fock(pts);
        REQUIRE(fit.per_n.count(n) == 1);
        const auto [a, b] = fit.per_n[n];
        for (int trial = 0; trial < 2; ++trial) {
            const double th = (rng.uniform() - 0.5) * kPi / 2.0;
            const double r = (rng.uniform() - 0.5) * 1.2;
            const cplx al(rng.uniform() - 0.5, rng.uniform() - 0.5);
            struct Fam {
                HybridGate gate;
                double k_qft;
            };
            std::vector<Fam> fams;
            HybridGate gd{HybridGate::Kind::D};
            gd.alpha = al;
            fams.push_back({gd, 2.0});
            HybridGate gr{HybridGate::Kind::R};
            gr.param = th;
            fams.push_back({gr, 2.0});
            HybridGate gs{HybridGate::Kind::S};
            gs.param = r;
            fams.push_back({gs, 4.0});
            HybridGate gb{HybridGate::Kind::BS};
            gb.param = th;
            gb.mode2 = 1;
            fams.push_back({gb, 4.0});
            for (const auto& fam : fams) {
                const bool two = fam.gate.kind == HybridGate::Kind::BS;
                const FockOracle& oracle = two ? oracle2 : oracle1;
                for (int k = 0; k <= 5; k += 5) {
                    const double err = gate_error_fock(fam.gate, k, g, oracle);
                    FockState in = two ? FockState::two_mode(oracle.cutoff(), k, 0)
                                       : FockState::single(oracle.cutoff(), k);
                    auto dists = qft_intermediate_distributions(fam.gate, in, oracle);
                    double eps_star = 0.0;
                    for (const auto& pr : dists)
                        eps_star = std::max(eps_star, general_state_bound(a, b, pr));
                    CHECK(err <= std::max(fam.k_qft * eps_star, 1e-11));
                }
            }
        }
    }
}

TEST_CASE("large-angle composition equals direct compilation semantically") {
    const int n = 4;
    const GridSpec g = GridSpec::make(n);
    const auto lay = one_mode(n);
    auto vec = encode_fock(1, g);
    {
        double nn = std::sqrt(norm2(vec));
        for (auto& z : vec) z /= nn;
    }
    const double theta = 3.0 * kPi / 4.0;
    StateVector direct = StateVector::from_mode_vectors(lay, {vec});
    run_circuit(compile_rotation(theta, g, lay, 0), direct, g);
    StateVector composed = StateVector::from_mode_vectors(lay, {vec});
    const auto sp = split_angle(theta, AngleFamily::rotation);
    run_circuit(compile_rotation(sp.delta, g, lay, 0), composed, g);
    run_circuit(compile_rotation(sp.theta0, g, lay, 0), composed, g);
    double d = 0.0;
    for (std::size_t i = 0; i < direct.amplitudes().size(); ++i)
        d += std::norm(direct.amplitudes()[i] - composed.amplitudes()[i]);
    CHECK(std::sqrt(d) < 1e-12);
}
