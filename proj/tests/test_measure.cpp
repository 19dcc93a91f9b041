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

#include "cvdv/measure.hpp"
#include "cvdv/oracle.hpp"

using namespace cvdv;

namespace {

std::vector<cplx> unit(std::vector<cplx> v) {
    double nn = std::sqrt(norm2(v));
    for (auto& z : v) z /= nn;
    return v;
}

StateVector fock_state(const GridSpec& g, int k, int dv = 0) {
    RegisterLayout lay{1, g.n, dv};
    return StateVector::from_mode_vectors(lay, {unit(encode_fock(k, g))});
}

} // namespace

TEST_CASE("homodyne of a computational basis state is deterministic") {
    const GridSpec g = GridSpec::make(4);
    RegisterLayout lay{1, 4, 0};
    std::vector<cplx> basis(g.N, 0.0);
    basis[11] = 1.0;
    StateVector sv = StateVector::from_mode_vectors(lay, {basis});
    Rng rng(3);
    auto out = homodyne(sv, 0, QuadratureBasis::position, g, rng);
    CHECK(out.bits == 11);
    CHECK(out.x == doctest::Approx(g.position(11)));
}

TEST_CASE("vacuum homodyne statistics") {
    const GridSpec g = GridSpec::make(6);
    StateVector sv = fock_state(g, 0);
    Rng rng(2024);
    const std::size_t shots = 10000;
    auto xs = homodyne_samples(sv, 0, QuadratureBasis::position, g, rng, shots);
    double mean = 0.0, m2 = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(shots);
    for (double x : xs) m2 += (x - mean) * (x - mean);
    m2 /= static_cast<double>(shots);
    const double sigma = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(mean) < 4.0 * sigma / std::sqrt(static_cast<double>(shots)));
    CHECK(m2 == doctest::Approx(0.5).epsilon(0.05));
    // momentum-basis statistics match (vacuum is Fourier-invariant)
    Rng rng2(2025);
    auto ps = homodyne_samples(sv, 0, QuadratureBasis::momentum, g, rng2, shots);
    double pmean = 0.0, pm2 = 0.0;
    for (double x : ps) pmean += x;
    pmean /= static_cast<double>(shots);
    for (double x : ps) pm2 += (x - pmean) * (x - pmean);
    pm2 /= static_cast<double>(shots);
    CHECK(std::abs(pmean) < 4.0 * sigma / std::sqrt(static_cast<double>(shots)));
    CHECK(pm2 == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("homodyne histogram matches the Born weights") {
    const GridSpec g = GridSpec::make(6);
    RegisterLayout lay{1, 6, 0};
    Rng mix(5);
    std::vector<cplx> vec(g.N, 0.0);
    for (int k = 0; k <= 4; ++k) {
        auto enc = encode_fock(k, g);
        const cplx c(mix.uniform() - 0.5, mix.uniform() - 0.5);
        for (std::size_t j = 0; j < g.N; ++j) vec[j] += c * enc[j];
    }
    vec = unit(vec);
    StateVector sv = StateVector::from_mode_vectors(lay, {vec});
    Rng rng(99);
    const std::size_t shots = 100000;
    std::vector<int> qs(6);
    for (int r = 0; r < 6; ++r) qs[static_cast<std::size_t>(r)] = r;
    auto samples = sv.sample_z(qs, rng, shots);
    std::vector<double> hist(g.N, 0.0);
    for (auto s : samples) hist[s] += 1.0 / static_cast<double>(shots);
    // chi-square against |amp|^2 over bins with expected count >= 10
    double chi2 = 0.0;
    int dof = 0;
    for (std::size_t j = 0; j < g.N; ++j) {
        const double p = std::norm(vec[j]);
        if (p * static_cast<double>(shots) < 10.0) continue;
        const double diff = hist[j] - p;
        chi2 += diff * diff * static_cast<double>(shots) / p;
        ++dof;
    }
    // dof is ~20; chi2 above 60 would be p < 1e-5
    CHECK(chi2 < 60.0);
    CHECK(dof > 10);
}

TEST_CASE("heterodyne of a displaced vacuum recovers the displacement") {
    const GridSpec g = GridSpec::make(6);
    RegisterLayout lay{1, 6, 0};
    const cplx beta(1.0, 0.5);
    StateVector sv = StateVector::from_mode_vectors(lay, {unit(encode(coherent_wavefunction(beta), g))});
    Rng rng(7);
    const std::size_t shots = 10000;
    auto samples = heterodyne_samples(sv, 0, g, rng, shots);
    cplx mean = 0.0;
    for (auto a : samples) mean += a;
    mean /= static_cast<double>(shots);
    // per-quadrature variance 1/2 -> se = 1/sqrt(2 shots)
    const double se = 1.0 / std::sqrt(2.0 * static_cast<double>(shots));
    CHECK(std::abs(mean.real() - beta.real()) < 5.0 * se);
    CHECK(std::abs(mean.imag() - beta.imag()) < 5.0 * se);
    double vre = 0.0;
    for (auto a : samples) vre += (a.real() - mean.real()) * (a.real() - mean.real());
    vre /= static_cast<double>(shots);
    CHECK(vre == doctest::Approx(0.5).epsilon(0.08));
}

TEST_CASE("heterodyne vacuum marginal is the Husimi Gaussian") {
    const GridSpec g = GridSpec::make(6);
    StateVector sv = fock_state(g, 0);
    Rng rng(11);
    const std::size_t shots = 10000;
    auto samples = heterodyne_samples(sv, 0, g, rng, shots);
    // Kolmogorov-Smirnov distance of Re alpha against N(0, 1/2), evaluated at
    // the grid cell edges (the outcomes live on the position lattice, so the
    // empirical CDF can only match the continuous one between lattice points)
    std::vector<double> re(shots);
    for (std::size_t i = 0; i < shots; ++i) re[i] = samples[i].real();
    std::sort(re.begin(), re.end());
    double ks = 0.0;
    for (std::size_t e = 0; e < g.N; ++e) {
        const double edge = g.position(e) + 0.5 * g.lambda;
        const double cdf = 0.5 * std::erfc(-edge / std::sqrt(2.0 * 0.5));
        const auto count = std::upper_bound(re.begin(), re.end(), edge) - re.begin();
        const double emp = static_cast<double>(count) / static_cast<double>(shots);
        ks = std::max(ks, std::abs(cdf - emp));
    }
    CHECK(ks < 0.02);
}

TEST_CASE("heterodyne consumes both registers and returns a collapsed state") {
    const GridSpec g = GridSpec::make(5);
    StateVector sv = fock_state(g, 1);
    Rng rng(13);
    (void)heterodyne(sv, 0, g, rng);
    CHECK(sv.norm() == doctest::Approx(1.0).epsilon(1e-10));
    // mode register is a computational basis state now
    auto probs = sv.outcome_distribution({0, 1, 2, 3, 4});
    int nonzero = 0;
    for (double p : probs) nonzero += (p > 1e-12);
    CHECK(nonzero == 1);
}

TEST_CASE("heterodyne needs room for the ancilla mode") {
    const GridSpec g = GridSpec::make(13);
    RegisterLayout lay{2, 13, 0}; // 26 qubits; the ancilla mode would need 39
    StateVector sv(lay);
    Rng rng(1);
    CHECK_THROWS_AS(heterodyne(sv, 0, g, rng), InvalidArgument);
}

TEST_CASE("photon counting is exact on Fock states") {
    const GridSpec g = GridSpec::make(7);
    for (int k : {0, 3, 5}) {
        StateVector sv = fock_state(g, k, 1);
        Rng rng(101 + k);
        auto out = photon_count(sv, 0, 7, g, rng);
        CHECK(out.gamma == 3);
        CHECK(out.k == k);
    }
    // cutoff need not be a power of two minus one: the 2^gamma modulus keeps
    // the phases exactly representable either way
    StateVector sv = fock_state(g, 5, 1);
    Rng rng(55);
    auto out = photon_count(sv, 0, 5, g, rng);
    CHECK(out.gamma == 3);
    CHECK(out.k == 5);
}

TEST_CASE("photon counting is projective") {
    const GridSpec g = GridSpec::make(6);
    RegisterLayout lay{1, 6, 1};
    auto v0 = unit(encode_fock(0, g));
    auto v1 = unit(encode_fock(1, g));
    std::vector<cplx> vec(g.N);
    for (std::size_t j = 0; j < g.N; ++j) vec[j] = std::sqrt(0.5) * (v0[j] + v1[j]);
    int repeats_agree = 0;
    const int trials = 20;
    int ones = 0;
    for (int t = 0; t < trials; ++t) {
        StateVector sv = StateVector::from_mode_vectors(lay, {vec});
        Rng rng(500 + t);
        auto first = photon_count(sv, 0, 1, g, rng);
        auto second = photon_count(sv, 0, 1, g, rng);
        repeats_agree += (first.k == second.k);
        ones += (first.k == 1);
    }
    CHECK(repeats_agree == trials);
    CHECK(ones > 2);
    CHECK(ones < 18);
}

TEST_CASE("photon counting requires an ancilla qubit") {
    const GridSpec g = GridSpec::make(5);
    StateVector sv = fock_state(g, 0, 0);
    Rng rng(0);
    CHECK_THROWS_AS(photon_count(sv, 0, 3, g, rng), InvalidArgument);
}
