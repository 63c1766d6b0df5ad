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

#include <cmath>
#include <vector>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/fock_oracle.hpp"
#include "phaseprobe/initial_states.hpp"
#include "phaseprobe/special_functions.hpp"
#include "support.hpp"

using namespace phaseprobe;

namespace {

std::vector<StateSpec> sample_states() {
    GaussianParams g{0.4, -0.3, -0.2, 0.5};
    EntangledCoherentParams ec;
    ec.alpha1 = {0.8, 0.3};
    ec.beta1 = {-0.5, 0.2};
    ec.alpha2 = {0.1, -0.9};
    ec.beta2 = {-0.7, -0.2};
    ec.c1 = {0.6, 0.1};
    ec.c2 = {-0.3, 0.7};
    SeparableNumberParams sn;
    sn.n1 = 2;
    sn.m1 = 0;
    sn.n2 = 1;
    sn.m2 = 3;
    sn.alpha1 = {0.6, 0.0};
    sn.beta1 = {0.0, 0.8};
    sn.alpha2 = {0.5, 0.5};
    sn.beta2 = {-0.5, 0.5};
    EntangledNumberParams en; // (1,0;0,1), p1 = p2 = 1/sqrt 2
    return {g, ec, sn, en};
}

} // namespace

TEST_CASE("laguerre") {
    for (int k : {-0, 1, 3}) {
        CHECK(laguerre(0, k, 0.37) == 1.0);
    }
    CHECK(laguerre(1, 0, 0.3) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(laguerre(2, 0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    // L_2^{(1)}(x) = 3 - 3x + x^2/2
    CHECK(laguerre(2, 1, 0.8) == doctest::Approx(3 - 2.4 + 0.32).epsilon(1e-14));
    // negative order with n + k >= 0: L_2^{(-1)}(x) = -x + x^2/2
    CHECK(laguerre(2, -1, 0.8) == doctest::Approx(-0.8 + 0.32).epsilon(1e-14));
    CHECK_THROWS_AS(laguerre(-1, 0, 0.5), ContractViolation);
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(10) == 3628800.0);
    CHECK(log_factorial(200) == doctest::Approx(std::lgamma(201.0)));
    CHECK(log_factorial(20) == doctest::Approx(std::log(factorial(20))));
}

TEST_CASE("displaced number elements") {
    const cplx z{0.3, -0.4};
    CHECK(std::abs(displaced_number_element(0, 0, z) -
                   std::exp(-std::norm(z) / 2)) < 1e-15);
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4; ++m) {
            CHECK(std::abs(displaced_number_element(n, m, 0.0) -
                           (n == m ? 1.0 : 0.0)) < 1e-15);
        }
    }

    const CMatrix d = displacement_matrix(60, 0.5);
    CHECK(std::abs(displaced_number_element(2, 1, 0.5) - d(2, 1)) < 1e-10);

    const CMatrix dz = displacement_matrix(60, z);
    for (int n = 0; n < 6; ++n) {
        for (int m = 0; m < 6; ++m) {
            CHECK(std::abs(displaced_number_element(n, m, z) - dz(n, m)) <
                  1e-10);
        }
    }
}

TEST_CASE("coherent displacement element") {
    // <0|D(eta)|0> of the vacuum.
    const cplx eta{0.2, 0.7};
    CHECK(std::abs(coherent_displacement_element(0.0, eta, 0.0) -
                   std::exp(-std::norm(eta) / 2)) < 1e-15);
}

TEST_CASE("vacuum and Gaussian closed forms") {
    const auto vac = make_state(GaussianParams{});
    CHECK(std::abs(vac({}) - 1.0) < 1e-15);
    CHECK(std::abs(vac({1, 0, 0, 0}) - std::exp(-0.25)) < 1e-15);
    for (int i = 0; i < 20; ++i) {
        const auto R = testing::random_point(2.0);
        CHECK(std::abs(vac(R) - testing::vacuum2(R)) < 1e-15);
    }

    // A shifted centroid only adds the phase exp(i R . x_o).
    const auto g = make_state(GaussianParams{0.5, -1.0, 0.25, 2.0});
    const PhaseVec4 R{0.3, 0.2, -0.7, 0.1};
    const double ph = 0.3 * 0.5 + 0.2 * -1.0 + -0.7 * 0.25 + 0.1 * 2.0;
    CHECK(std::abs(g(R) - std::polar(std::exp(-R.norm2() / 4), ph)) < 1e-15);
}

TEST_CASE("characteristic function contracts for every family") {
    for (const auto &spec : sample_states()) {
        const auto w = make_state(spec);
        CAPTURE(family_name(w.family()));
        CHECK(std::abs(w({}) - 1.0) < 1e-12);
        for (int i = 0; i < 200; ++i) {
            const auto R = testing::random_point(3.0);
            CHECK(std::abs(w(-R) - std::conj(w(R))) < 1e-12);
            CHECK(std::abs(w(R)) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("separable families factor") {
    for (const auto &spec : {sample_states()[0], sample_states()[2]}) {
        const auto w = make_state(spec);
        REQUIRE(w.is_factorizable());
        for (int i = 0; i < 50; ++i) {
            const auto R = testing::random_point(2.5);
            CHECK(std::abs(w(R) - w.reduced1(R.block1()) * w.reduced2(R.block2())) <
                  1e-12);
        }
    }
    CHECK_FALSE(make_state(EntangledCoherentParams{}).is_factorizable());
    CHECK_FALSE(make_state(EntangledNumberParams{}).is_factorizable());
}

TEST_CASE("Gaussian purity integral") {
    // (2 pi)^-2 int |w|^2 dR = 1 for a pure state.
    const auto w = make_state(GaussianParams{0.3, -0.2, 0.1, 0.4});
    const double h = 0.4;
    const int n = 31; // [-6, 6]
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    const PhaseVec4 R{-6 + a * h, -6 + b * h, -6 + c * h,
                                      -6 + d * h};
                    acc += std::norm(w(R));
                }
            }
        }
    }
    const double integral = acc * std::pow(h, 4) / std::pow(2 * testing::kPi, 2);
    CHECK(std::abs(integral - 1.0) < 0.01);
}

TEST_CASE("oracle sampler agrees on a 5^4 grid") {
    const double axis[5] = {-1.6, -0.7, 0.0, 0.5, 1.3};
    for (const auto &spec : sample_states()) {
        const auto w = make_state(spec);
        const CMatrix amp = oscillator_amplitudes(spec, 60, 60);
        CAPTURE(family_name(w.family()));
        double worst = 0.0;
        for (double a : axis) {
            for (double b : axis) {
                for (double c : axis) {
                    for (double d : axis) {
                        const PhaseVec4 R{a, b, c, d};
                        worst = std::max(
                            worst, std::abs(w(R) - charfn_sample_pure(amp, R)));
                    }
                }
            }
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("number states reject equal levels") {
    SeparableNumberParams sn;
    sn.m1 = sn.n1;
    CHECK_THROWS_AS(make_state(sn), ContractViolation);
    EntangledNumberParams en;
    en.m2 = en.n2;
    CHECK_THROWS_AS(make_state(en), ContractViolation);
    EntangledNumberParams zero;
    zero.p1 = zero.p2 = 0.0;
    CHECK_THROWS_AS(make_state(zero), ContractViolation);
}

TEST_CASE("weights are rescaled to unit norm") {
    EntangledNumberParams en;
    en.p1 = 2.0;
    en.p2 = 1.0;
    const auto w = make_state(en);
    CHECK(w.renormalized());
    CHECK(std::abs(w({}) - 1.0) < 1e-14);
    CHECK_FALSE(make_state(EntangledNumberParams{}).renormalized());

    // Overlapping coherent branches still give w(0) = 1.
    EntangledCoherentParams ec;
    ec.alpha1 = 0.2;
    ec.beta1 = -0.1;
    const auto wc = make_state(ec);
    CHECK(wc.renormalized());
    CHECK(std::abs(wc({}) - 1.0) < 1e-14);
}

TEST_CASE("printed entangled-number formula with the exact prefactor") {
    EntangledNumberParams en;
    en.n1 = 1;
    en.m1 = 0;
    en.n2 = 2;
    en.m2 = 0;
    const auto exact = make_state(en);
    en.mode = NumberFormMode::PaperLiteral;
    en.paper_b = exact_interference_prefactor(1, 0, 2, 0);
    const auto literal = make_state(en);
    for (int i = 0; i < 50; ++i) {
        const auto R = testing::random_point(2.0);
        CHECK(std::abs(exact(R) - literal(R)) < 1e-12);
    }

    EntangledNumberParams bad; // n2 < m2
    bad.mode = NumberFormMode::PaperLiteral;
    CHECK_THROWS_AS(make_state(bad), ContractViolation);
}

TEST_CASE("printed separable-number formula drops the interference terms") {
    SeparableNumberParams sn;
    sn.n2 = 1;
    sn.m2 = 0;
    const auto exact = make_state(sn);
    sn.mode = NumberFormMode::PaperLiteral;
    const auto literal = make_state(sn);
    // Amplitudes enter linearly, as printed, so the trace is not 1.
    CHECK(std::abs(literal({}) - (sn.alpha1 + sn.beta1) * (sn.alpha2 + sn.beta2)) <
          1e-14);
    const PhaseVec4 R{0.8, -0.4, 0.3, 0.9};
    CHECK(std::abs(exact(R) - literal(R)) > 1e-3);
    CHECK_THROWS_AS(oscillator_amplitudes(sn, 10, 10), UnsupportedStateError);
}

TEST_CASE("single-mode evaluator") {
    const SingleModeCharFn vac{CoherentMode{}};
    CHECK(vac.is_vacuum());
    CHECK(std::abs(vac({0.6, -0.8}) - std::exp(-0.25)) < 1e-15);
    CHECK_FALSE(SingleModeCharFn{CoherentMode{0.1, 0.0}}.is_vacuum());

    NumberSuperposition ns{2, 0, {0.6, 0.0}, {0.0, 0.8}};
    const SingleModeCharFn w{ns};
    const CVector amp = single_mode_amplitudes(ns, 40);
    const CMatrix col = amp; // n x 1 amplitude matrix
    for (int i = 0; i < 20; ++i) {
        const PhaseVec2 r{testing::uniform(-2, 2), testing::uniform(-2, 2)};
        CHECK(std::abs(w(r) - charfn_sample_pure(col, {r, {}})) < 1e-10);
    }
}
