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
#include "phaseprobe/initial_states.hpp"

#include <array>
#include <cmath>
#include <string>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/special_functions.hpp"

namespace phaseprobe {

namespace {

constexpr double kNormTolerance = 1e-12;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

// Displacement argument of exp(i(k x + s p)) = D(eta).
cplx displacement_of(const PhaseVec2 &r) {
    return cplx(-r.s, r.k) * kInvSqrt2;
}

cplx ipow(cplx z, int e) {
    cplx acc = 1.0;
    for (int i = 0; i < e; ++i) {
        acc *= z;
    }
    return acc;
}

cplx ladder_of(cplx centroid) { return centroid * kInvSqrt2; }

cplx coherent_ket_phase(cplx centroid) {
    return std::polar(1.0, 0.5 * centroid.real() * centroid.imag());
}

void require_distinct(int n, int m, const char *what) {
    if (n < 0 || m < 0) {
        throw ContractViolation(std::string(what) +
                                ": number levels must be non-negative");
    }
    if (n == m) {
        throw ContractViolation(std::string(what) +
                                ": levels n and m must differ (got " +
                                std::to_string(n) + ")");
    }
}

// Rescales (a, b) to unit norm; returns true when a rescale happened.
bool normalize_pair(cplx &a, cplx &b, const char *what) {
    const double nrm = std::norm(a) + std::norm(b);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw ContractViolation(std::string(what) + ": amplitudes vanish");
    }
    if (std::abs(nrm - 1.0) <= kNormTolerance) {
        return false;
    }
    const double f = 1.0 / std::sqrt(nrm);
    a *= f;
    b *= f;
    return true;
}

cplx gaussian_mode(const PhaseVec2 &r, double x, double p) {
    return std::exp(cplx(-0.25 * r.norm2(), r.k * x + r.s * p));
}

cplx number_superposition_mode(const PhaseVec2 &r,
                               const NumberSuperposition &st) {
    const cplx eta = displacement_of(r);
    const std::array<int, 2> lv{st.n, st.m};
    const std::array<cplx, 2> amp{st.alpha, st.beta};
    cplx acc = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            acc += amp[a] * std::conj(amp[b]) *
                   displaced_number_element(lv[b], lv[a], eta);
        }
    }
    return acc;
}

cplx literal_superposition_mode(const PhaseVec2 &r, int n, int m, cplx a,
                                cplx b) {
    const double x = 0.5 * r.norm2();
    return std::exp(-0.25 * r.norm2()) *
           (a * laguerre(n, 0, x) + b * laguerre(m, 0, x));
}

cplx entangled_number_exact(const PhaseVec4 &R,
                            const EntangledNumberParams &st) {
    const cplx e1 = displacement_of(R.block1());
    const cplx e2 = displacement_of(R.block2());
    // branch a = (n1, m2) with p1, branch b = (m1, n2) with p2
    const std::array<std::array<int, 2>, 2> lv{{{st.n1, st.m2},
                                                {st.m1, st.n2}}};
    const std::array<cplx, 2> amp{st.p1, st.p2};
    cplx acc = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            acc += amp[a] * std::conj(amp[b]) *
                   displaced_number_element(lv[b][0], lv[a][0], e1) *
                   displaced_number_element(lv[b][1], lv[a][1], e2);
        }
    }
    return acc;
}

cplx entangled_number_literal(const PhaseVec4 &R,
                              const EntangledNumberParams &st) {
    const double x1 = 0.5 * R.block1().norm2();
    const double x2 = 0.5 * R.block2().norm2();
    const int d1 = st.n1 - st.m1;
    const int d2 = st.n2 - st.m2;
    const cplx i(0.0, 1.0);
    const double lag = laguerre(st.m1, d1, x1) * laguerre(st.m2, d2, x2);
    const cplx cross =
        st.p1 * std::conj(st.p2) * ipow((i * R.k1 + R.s1) * 0.5, d1) *
            ipow((i * R.k2 - R.s2) * 0.5, d2) * lag +
        std::conj(st.p1) * st.p2 * ipow((i * R.k1 - R.s1) * 0.5, d1) *
            ipow((i * R.k2 + R.s2) * 0.5, d2) * lag;
    const cplx diag = std::norm(st.p1) * laguerre(st.n1, 0, x1) *
                          laguerre(st.m2, 0, x2) +
                      std::norm(st.p2) * laguerre(st.m1, 0, x1) *
                          laguerre(st.n2, 0, x2);
    return std::exp(-0.25 * R.norm2()) * (diag + st.paper_b * cross);
}

} // namespace

// --- SingleModeCharFn ----------------------------------------------------

SingleModeCharFn::SingleModeCharFn(SingleModeSpec spec)
    : spec_(std::move(spec)) {
    if (auto *ns = std::get_if<NumberSuperposition>(&spec_)) {
        require_distinct(ns->n, ns->m, "number superposition");
        renormalized_ = normalize_pair(ns->alpha, ns->beta,
                                       "number superposition");
    }
}

cplx SingleModeCharFn::operator()(const PhaseVec2 &r) const {
    return std::visit(
        overloaded{[&](const CoherentMode &c) {
                       return gaussian_mode(r, c.x, c.p);
                   },
                   [&](const NumberSuperposition &ns) {
                       return number_superposition_mode(r, ns);
                   }},
        spec_);
}

bool SingleModeCharFn::is_vacuum() const noexcept {
    if (const auto *c = std::get_if<CoherentMode>(&spec_)) {
        return c->x == 0.0 && c->p == 0.0;
    }
    const auto &ns = std::get<NumberSuperposition>(spec_);
    return (ns.n == 0 && ns.beta == 0.0) || (ns.m == 0 && ns.alpha == 0.0);
}

// --- two-oscillator families ---------------------------------------------

std::string_view family_name(StateFamily f) {
    switch (f) {
    case StateFamily::SeparableGaussian:
        return "separable_gaussian";
    case StateFamily::EntangledCoherent:
        return "entangled_coherent";
    case StateFamily::SeparableNumber:
        return "separable_number";
    case StateFamily::EntangledNumber:
        return "entangled_number";
    }
    return "unknown";
}

double exact_interference_prefactor(int n1, int m1, int n2, int m2) {
    if (n1 < m1 || n2 < m2) {
        throw ContractViolation(
            "interference prefactor defined for n_i >= m_i only");
    }
    const int d1 = n1 - m1;
    const int d2 = n2 - m2;
    return std::exp(0.5 * (log_factorial(m1) - log_factorial(n1) +
                           log_factorial(m2) - log_factorial(n2)) +
                    0.5 * (d1 + d2) * std::log(2.0));
}

CharFnState make_state(const StateSpec &spec) {
    CharFnState st;
    st.spec_ = spec;
    std::visit(
        overloaded{
            [&](GaussianParams &g) {
                if (!std::isfinite(g.x_o1) || !std::isfinite(g.p_o1) ||
                    !std::isfinite(g.x_o2) || !std::isfinite(g.p_o2)) {
                    throw ContractViolation("gaussian centroids must be finite");
                }
            },
            [&](EntangledCoherentParams &ec) {
                st.phase_a_ = coherent_ket_phase(ec.alpha1) *
                              coherent_ket_phase(ec.beta2);
                st.phase_b_ = coherent_ket_phase(ec.beta1) *
                              coherent_ket_phase(ec.alpha2);
                // <branch b | branch a>
                const cplx ov =
                    coherent_displacement_element(ladder_of(ec.beta1), 0.0,
                                                  ladder_of(ec.alpha1)) *
                    coherent_displacement_element(ladder_of(ec.alpha2), 0.0,
                                                  ladder_of(ec.beta2)) *
                    st.phase_a_ * std::conj(st.phase_b_);
                const double nrm =
                    std::norm(ec.c1) + std::norm(ec.c2) +
                    2.0 * std::real(ec.c1 * std::conj(ec.c2) * ov);
                if (!(nrm > 0.0) || !std::isfinite(nrm)) {
                    throw ContractViolation(
                        "entangled coherent: superposition has zero norm");
                }
                if (std::abs(nrm - 1.0) > kNormTolerance) {
                    const double f = 1.0 / std::sqrt(nrm);
                    ec.c1 *= f;
                    ec.c2 *= f;
                    st.renormalized_ = true;
                }
            },
            [&](SeparableNumberParams &sn) {
                require_distinct(sn.n1, sn.m1, "separable number, oscillator 1");
                require_distinct(sn.n2, sn.m2, "separable number, oscillator 2");
                if (sn.mode == NumberFormMode::Exact) {
                    st.renormalized_ =
                        normalize_pair(sn.alpha1, sn.beta1, "oscillator 1");
                    st.renormalized_ |=
                        normalize_pair(sn.alpha2, sn.beta2, "oscillator 2");
                }
            },
            [&](EntangledNumberParams &en) {
                require_distinct(en.n1, en.m1, "entangled number, oscillator 1");
                require_distinct(en.n2, en.m2, "entangled number, oscillator 2");
                if (en.mode == NumberFormMode::PaperLiteral &&
                    (en.n1 < en.m1 || en.n2 < en.m2)) {
                    throw ContractViolation(
                        "entangled number: literal formula needs n_i >= m_i");
                }
                st.renormalized_ = normalize_pair(en.p1, en.p2, "weights p1, p2");
            }},
        st.spec_);
    return st;
}

cplx CharFnState::operator()(const PhaseVec4 &R) const {
    return std::visit(
        overloaded{
            [&](const GaussianParams &g) {
                return gaussian_mode(R.block1(), g.x_o1, g.p_o1) *
                       gaussian_mode(R.block2(), g.x_o2, g.p_o2);
            },
            [&](const EntangledCoherentParams &ec) {
                const cplx e1 = displacement_of(R.block1());
                const cplx e2 = displacement_of(R.block2());
                const std::array<cplx, 2> m1{ladder_of(ec.alpha1),
                                             ladder_of(ec.beta1)};
                const std::array<cplx, 2> m2{ladder_of(ec.beta2),
                                             ladder_of(ec.alpha2)};
                const std::array<cplx, 2> amp{ec.c1 * phase_a_,
                                              ec.c2 * phase_b_};
                cplx acc = 0.0;
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        acc += amp[a] * std::conj(amp[b]) *
                               coherent_displacement_element(m1[b], e1, m1[a]) *
                               coherent_displacement_element(m2[b], e2, m2[a]);
                    }
                }
                return acc;
            },
            [&](const SeparableNumberParams &sn) {
                if (sn.mode == NumberFormMode::PaperLiteral) {
                    return literal_superposition_mode(R.block1(), sn.n1, sn.m1,
                                                      sn.alpha1, sn.beta1) *
                           literal_superposition_mode(R.block2(), sn.n2, sn.m2,
                                                      sn.alpha2, sn.beta2);
                }
                return number_superposition_mode(
                           R.block1(), {sn.n1, sn.m1, sn.alpha1, sn.beta1}) *
                       number_superposition_mode(
                           R.block2(), {sn.n2, sn.m2, sn.alpha2, sn.beta2});
            },
            [&](const EntangledNumberParams &en) {
                return en.mode == NumberFormMode::PaperLiteral
                           ? entangled_number_literal(R, en)
                           : entangled_number_exact(R, en);
            }},
        spec_);
}

StateFamily CharFnState::family() const noexcept {
    return static_cast<StateFamily>(spec_.index());
}

bool CharFnState::is_factorizable() const noexcept {
    if (std::holds_alternative<GaussianParams>(spec_)) {
        return true;
    }
    if (const auto *sn = std::get_if<SeparableNumberParams>(&spec_)) {
        return sn->mode == NumberFormMode::Exact;
    }
    return false;
}

} // namespace phaseprobe
