// Copyright 2026 The phaseprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "phaseprobe/format.hpp"
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/fock_oracle.hpp"
#include "support.hpp"

using namespace phaseprobe;
using testing::kPi;

namespace {

CVector random_state(Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = {testing::uniform(-1, 1), testing::uniform(-1, 1)};
    }
    return v / v.norm();
}

Matrix4c projector(const Eigen::Vector4cd &v) { return v * v.adjoint(); }

} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(FockConfig{}.validate());
    CHECK_THROWS_AS((FockConfig{1, 10, 1e-10}.validate()), ContractViolation);
    CHECK_THROWS_AS((FockConfig{10, 10, 0.0}.validate()), ContractViolation);
}

TEST_CASE("decoupled Hamiltonian spectrum") {
    ModelParams p;
    p.delta1 = 0.8;
    p.delta2 = -0.35;
    p.omega2 = kPi;
    const FockConfig cfg{5, 4, 1e-10};
    const auto h = build_hamiltonian(p, cfg, 0.5);
    REQUIRE(h.dimension() == 4 * 5 * 4);
    CHECK(h.dims == std::vector<int>{2, 2, 5, 4});

    std::vector<double> want;
    for (int z1 : {-1, 1}) {
        for (int z2 : {-1, 1}) {
            for (int n = 0; n < 5; ++n) {
                for (int m = 0; m < 4; ++m) {
                    want.push_back(z1 * p.delta1 / 2 + z2 * p.delta2 / 2 +
                                   (n + 0.5) + p.omega2 * (m + 0.5));
                }
            }
        }
    }
    std::sort(want.begin(), want.end());
    const SpectralPropagator prop(h);
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(std::abs(prop.energies()(static_cast<Eigen::Index>(i)) - want[i]) <
              1e-12);
    }
}

TEST_CASE("Hamiltonian is Hermitian") {
    ModelParams p{0.3, -0.7, kPi, 0.5, 0.1};
    const auto h = build_hamiltonian(p, {8, 6, 1e-10}, 0.5);
    CHECK((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("dense size guard") {
    CHECK_THROWS_AS(build_hamiltonian(ModelParams{}, {40, 40, 1e-10}, 0.5),
                    ResourceError);
    CHECK_THROWS_AS(build_single_hamiltonian(0.0, 0.5, 600, 0.5), ResourceError);
}

TEST_CASE("two pairs decompose into single-pair Hamiltonians") {
    // With Omega = 1 both pairs are copies of the single-pair model.
    ModelParams p{0.4, -0.9, 1.0, 0.7, 0.2};
    const int n1 = 5, n2 = 4;
    const auto h = build_hamiltonian(p, {n1, n2, 1e-10}, 0.5);
    const auto s1 = build_single_hamiltonian(p.delta1, p.g1, n1, 0.5);
    const auto s2 = build_single_hamiltonian(p.delta2, p.g2, n2, 0.5);
    auto idx = [&](int q1, int q2, int n, int m) {
        return ((q1 * 2 + q2) * n1 + n) * n2 + m;
    };
    double worst = 0.0;
    for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
    for (int n = 0; n < n1; ++n)
    for (int m = 0; m < n2; ++m)
    for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2)
    for (int k = 0; k < n1; ++k)
    for (int l = 0; l < n2; ++l) {
        cplx want = 0.0;
        if (q2 == r2 && m == l) {
            want += s1.matrix(q1 * n1 + n, r1 * n1 + k);
        }
        if (q1 == r1 && n == k) {
            want += s2.matrix(q2 * n2 + m, r2 * n2 + l);
        }
        worst = std::max(worst,
                         std::abs(h.matrix(idx(q1, q2, n, m), idx(r1, r2, k, l)) -
                                  want));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("single-pair Hamiltonian") {
    // delta/2 sigma_z + n + 1/2 + g sigma_z x_scale (a + a^dagger)
    const int n = 6;
    const auto h = build_single_hamiltonian(0.6, 0.3, n, 0.5);
    CHECK(std::abs(h.matrix(0, 0) - (-0.3 + 0.5)) < 1e-15);
    CHECK(std::abs(h.matrix(n + 2, n + 2) - (0.3 + 2.5)) < 1e-15);
    CHECK(std::abs(h.matrix(n + 1, n + 2) - 0.3 * 0.5 * std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(h.matrix(1, 2) + 0.3 * 0.5 * std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(h.matrix(0, n)) == 0.0);
}

TEST_CASE("evolve") {
    ModelParams p{0.2, 0.5, 1.3, 0.6, 0.4};
    const auto h = build_hamiltonian(p, {6, 6, 1e-10}, 0.5);
    const CVector psi0 = random_state(h.dimension());
    const SpectralPropagator prop(h);
    CHECK((prop.evolve(psi0, 0.0) - psi0).norm() < 1e-13);
    for (int i = 1; i <= 50; ++i) {
        const double t = 0.37 * i;
        CHECK(std::abs(prop.evolve(psi0, t).norm() - 1.0) < 1e-12);
    }
    CHECK((evolve(h, psi0, 1.7) - prop.evolve(psi0, 1.7)).norm() < 1e-12);
}

TEST_CASE("free coherent state rotates as alpha e^{-it}") {
    const int n = 40;
    const double x = 1.1, pq = -0.6;
    const cplx alpha = cplx{x, pq} / std::sqrt(2.0);
    const auto h = build_single_hamiltonian(0.4, 0.0, n, 0.5);
    CVector psi0 = CVector::Zero(2 * n);
    psi0.tail(n) = coherent_amplitudes(n, x, pq); // qubit excited
    const SpectralPropagator prop(h);
    for (double t : {0.0, 0.5, 2.0, 5.3}) {
        const CVector psi = prop.evolve(psi0, t).tail(n);
        cplx a = 0.0;
        for (int k = 0; k + 1 < n; ++k) {
            a += std::conj(psi(k)) * std::sqrt(k + 1.0) * psi(k + 1);
        }
        CHECK(std::abs(a - alpha * std::polar(1.0, -t)) < 1e-10);
    }
}

TEST_CASE("coherent amplitudes") {
    const CVector c = coherent_amplitudes(40, 0.9, 0.4);
    CHECK(std::abs(c.norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(coherent_amplitudes(10, 4.0, 4.0), TruncationError);
}

TEST_CASE("sector propagation matches the dense propagator") {
    ModelParams p{0.3, -0.4, kPi, 0.5, 0.1};
    const FockConfig cfg{8, 8, 1e-10};
    const StateSpec spec = EntangledNumberParams{};
    QubitPreparation prep{{0.6, 0.0}, {0.0, 0.8}, {kInvSqrt2, 0.0},
                          {kInvSqrt2, 0.0}};
    const SectorState s0 =
        product_state(prep.amplitudes(), oscillator_amplitudes(spec, 8, 8));
    CHECK(std::abs(s0.norm2() - 1.0) < 1e-14);
    const SectorPropagator sectors(p, cfg, 0.5);
    const SpectralPropagator dense(build_hamiltonian(p, cfg, 0.5));
    for (double t : {0.0, 0.9, 3.1, 7.4}) {
        CHECK((sectors.evolve(s0, t).dense() - dense.evolve(s0.dense(), t))
                  .norm() < 1e-11);
    }
}

TEST_CASE("Wootters concurrence") {
    const double r = 1.0 / std::sqrt(2.0);
    const Eigen::Vector4cd psi_plus{0.0, r, r, 0.0};
    CHECK(std::abs(wootters_concurrence(projector(psi_plus)) - 1.0) < 1e-12);

    const Eigen::Vector2cd u{cplx{0.6, 0.0}, cplx{0.0, 0.8}};
    const Eigen::Vector2cd v{cplx{0.28, 0.96}, cplx{0.0, 0.0}};
    Eigen::Vector4cd prod;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            prod(2 * i + j) = u(i) * v(j);
        }
    }
    CHECK(wootters_concurrence(projector(prod)) < 1e-7);

    const double pw = 0.8;
    const Matrix4c werner =
        pw * projector(psi_plus) + (1 - pw) * Matrix4c::Identity() / 4.0;
    CHECK(std::abs(wootters_concurrence(werner) - 0.7) < 1e-12);

    Matrix4c bad = Matrix4c::Identity() / 2.0;
    CHECK_THROWS_AS(wootters_concurrence(bad), ContractViolation);
    bad = Matrix4c::Identity() / 4.0;
    bad(0, 1) = 0.1;
    CHECK_THROWS_AS(wootters_concurrence(bad), ContractViolation);
    bad = Matrix4c::Zero();
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(wootters_concurrence(bad), ContractViolation);
}

TEST_CASE("spin flip") {
    const Matrix4c f = spin_flip_operator();
    CHECK((f * f - Matrix4c::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(f(0, 3) + 1.0) < 1e-15);
    CHECK(std::abs(f(1, 2) - 1.0) < 1e-15);
}

TEST_CASE("partial trace") {
    const std::vector<int> dims{2, 3, 4};
    const CVector psi = random_state(24);

    const CMatrix all = partial_trace(psi, dims, {});
    REQUIRE(all.rows() == 1);
    CHECK(std::abs(all(0, 0) - 1.0) < 1e-14);

    const CMatrix full = partial_trace(psi, dims, {0, 1, 2});
    CHECK((full - psi * psi.adjoint()).norm() < 1e-14);

    const CMatrix r1 = partial_trace(psi, dims, {1});
    CHECK(std::abs(r1.trace() - 1.0) < 1e-12);
    CHECK((r1 - r1.adjoint()).norm() < 1e-14);
    const CMatrix rho = psi * psi.adjoint();
    CHECK((partial_trace(rho, dims, {0, 2}) - partial_trace(psi, dims, {0, 2}))
              .norm() < 1e-14);

    // Product state: the kept factor stays pure.
    const CVector a = random_state(2), b = random_state(12);
    CVector prod(24);
    for (int i = 0; i < 2; ++i) {
        prod.segment(12 * i, 12) = a(i) * b;
    }
    const CMatrix q1 = partial_trace(prod, dims, {0});
    CHECK(std::abs((q1 * q1).trace() - 1.0) < 1e-12);

    CHECK_THROWS_AS(partial_trace(psi, dims, {3}), ContractViolation);
    CHECK_THROWS_AS(partial_trace(psi, dims, {1, 0}), ContractViolation);
    CHECK_THROWS_AS(partial_trace(psi, {2, 3}, {0}), ContractViolation);
}

TEST_CASE("characteristic-function sampler") {
    const int n = 40;
    CMatrix rho = CMatrix::Zero(n * n, n * n);
    rho(0, 0) = 1.0;
    CHECK(std::abs(charfn_sample(rho, n, n, {}) - 1.0) < 1e-14);
    for (int i = 0; i < 4; ++i) {
        const auto R = testing::random_point(1.5);
        CHECK(std::abs(charfn_sample(rho, n, n, R) - testing::vacuum2(R)) < 1e-10);
    }

    // Density and pure routes agree.
    const CMatrix amp = oscillator_amplitudes(EntangledNumberParams{}, 6, 6);
    const CVector vec = amp.transpose().reshaped(); // row-major n (x) m
    const CMatrix dm = vec * vec.adjoint();
    const PhaseVec4 R{0.4, -0.3, 0.9, 0.2};
    CHECK(std::abs(charfn_sample(dm, 6, 6, R) - charfn_sample_pure(amp, R)) <
          1e-12);
}

TEST_CASE("Bell copy stays an X-state") {
    ModelParams p;
    p.g1 = p.g2 = 0.5;
    const ProtocolOracle oracle(p, GaussianParams{}, QubitPreparation::maximal(),
                                {40, 40, 1e-10});
    const OracleSample s = oracle.sample(kPi);
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool centre = (i == 1 || i == 2) && (j == 1 || j == 2);
            if (!centre) {
                off = std::max(off, std::abs(s.rho_bell(i, j)));
            }
        }
    }
    CHECK(off < 1e-10);
    CHECK(std::abs(s.rho_bell.trace() - 1.0) < 1e-12);
    CHECK(s.leakage < 1e-10);
}

TEST_CASE("oracle truncation failure suggests larger sizes") {
    ModelParams p;
    p.g1 = p.g2 = 1.5;
    const ProtocolOracle oracle(p, GaussianParams{}, QubitPreparation::maximal(),
                                {6, 7, 1e-10});
    try {
        (void)oracle.sample(kPi);
        FAIL("expected TruncationError");
    } catch (const TruncationError &e) {
        CHECK(e.suggested_n1() == 12);
        CHECK(e.suggested_n2() == 14);
    }
}
