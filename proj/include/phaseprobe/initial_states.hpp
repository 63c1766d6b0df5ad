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
#pragma once

#include <complex>
#include <string_view>
#include <variant>

#include "phaseprobe/phase_space.hpp"

namespace phaseprobe {

using cplx = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Characteristic functions here are w(R) = tr[rho exp(i(k x + s p))] in
/// canonical quadratures, so the vacuum is exp(-|R|^2 / 4). A coherent
/// amplitude alpha = x + i p names the phase-space centroid (x, p); the
/// corresponding ladder eigenvalue is alpha / sqrt(2).

// --- single oscillator -------------------------------------------------

/// Coherent state centred at (x, p), covariance 1/2.
struct CoherentMode {
    double x = 0.0;
    double p = 0.0;

    bool operator==(const CoherentMode &) const = default;
};

/// alpha |n> + beta |m>, n != m.
struct NumberSuperposition {
    int n = 1;
    int m = 0;
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};

    bool operator==(const NumberSuperposition &) const = default;
};

using SingleModeSpec = std::variant<CoherentMode, NumberSuperposition>;

/// Evaluator r = (k, s) -> w(r) for one oscillator.
class SingleModeCharFn {
  public:
    explicit SingleModeCharFn(SingleModeSpec spec);

    cplx operator()(const PhaseVec2 &r) const;

    const SingleModeSpec &spec() const noexcept { return spec_; }
    bool is_vacuum() const noexcept;
    /// True when the amplitudes were rescaled to unit norm.
    bool renormalized() const noexcept { return renormalized_; }

  private:
    SingleModeSpec spec_;
    bool renormalized_ = false;
};

// --- two oscillators ---------------------------------------------------

enum class StateFamily {
    SeparableGaussian,
    EntangledCoherent,
    SeparableNumber,
    EntangledNumber
};

std::string_view family_name(StateFamily f);

/// Exact pure-state characteristic function, or the appendix formula as
/// printed (diagonal Laguerre terms only for the separable family, an
/// explicit prefactor B for the entangled one).
enum class NumberFormMode { Exact, PaperLiteral };

struct GaussianParams {
    double x_o1 = 0.0, p_o1 = 0.0;
    double x_o2 = 0.0, p_o2 = 0.0;

    bool operator==(const GaussianParams &) const = default;
};

/// c1 |alpha1, beta2> + c2 |beta1, alpha2>. Each ket has the wave function
/// psi(x) = exp(i p_c x - (x - x_c)^2/2) / pi^(1/4), which is
/// exp(i x_c p_c / 2) D(alpha / sqrt 2)|0>.
struct EntangledCoherentParams {
    cplx alpha1{1.0, 0.0}, beta1{-1.0, 0.0};
    cplx alpha2{1.0, 0.0}, beta2{-1.0, 0.0};
    cplx c1{kInvSqrt2, 0.0}, c2{kInvSqrt2, 0.0};

    bool operator==(const EntangledCoherentParams &) const = default;
};

/// (alpha1 |n1> + beta1 |m1>) (alpha2 |n2> + beta2 |m2>).
struct SeparableNumberParams {
    int n1 = 1, m1 = 0, n2 = 0, m2 = 1;
    cplx alpha1{kInvSqrt2, 0.0}, beta1{kInvSqrt2, 0.0};
    cplx alpha2{kInvSqrt2, 0.0}, beta2{kInvSqrt2, 0.0};
    NumberFormMode mode = NumberFormMode::Exact;

    bool operator==(const SeparableNumberParams &) const = default;
};

/// p1 |n1, m2> + p2 |m1, n2>.
struct EntangledNumberParams {
    int n1 = 1, m1 = 0, n2 = 0, m2 = 1;
    cplx p1{kInvSqrt2, 0.0}, p2{kInvSqrt2, 0.0};
    NumberFormMode mode = NumberFormMode::Exact;
    /// Prefactor of the interference terms in PaperLiteral mode.
    double paper_b = 1.0;

    bool operator==(const EntangledNumberParams &) const = default;
};

using StateSpec = std::variant<GaussianParams, EntangledCoherentParams,
                               SeparableNumberParams, EntangledNumberParams>;

/// The B that makes the printed entangled-number formula exact:
/// prod_i sqrt(m_i! / n_i!) 2^{(n_i - m_i)/2}, valid for n_i >= m_i.
double exact_interference_prefactor(int n1, int m1, int n2, int m2);

/// Immutable evaluator R -> w(R) for one of the four two-oscillator
/// families. Exact-mode evaluators satisfy w(0) = 1, w(-R) = conj(w(R)) and
/// |w(R)| <= 1.
class CharFnState {
  public:
    cplx operator()(const PhaseVec4 &R) const;

    StateFamily family() const noexcept;
    const StateSpec &spec() const noexcept { return spec_; }
    /// Separable families in exact mode factor as w1(r1) w2(r2).
    bool is_factorizable() const noexcept;
    /// Input weights were not normalized and have been rescaled.
    bool renormalized() const noexcept { return renormalized_; }

    /// Reduced single-oscillator characteristic functions, w(r1, 0) and
    /// w(0, r2).
    cplx reduced1(const PhaseVec2 &r1) const { return (*this)({r1, {}}); }
    cplx reduced2(const PhaseVec2 &r2) const { return (*this)({{}, r2}); }

  private:
    friend CharFnState make_state(const StateSpec &spec);

    CharFnState() = default;

    StateSpec spec_;       // normalized copy of the input
    cplx phase_a_{1.0, 0}; // branch phases (entangled coherent)
    cplx phase_b_{1.0, 0};
    bool renormalized_ = false;
};

/// Validates and normalizes `spec`. Throws ContractViolation when n_i == m_i,
/// when all weights vanish, or when the literal formula is requested
/// outside its printed domain n_i >= m_i.
CharFnState make_state(const StateSpec &spec);

} // namespace phaseprobe
