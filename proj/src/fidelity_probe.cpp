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
#include "phaseprobe/fidelity_probe.hpp"

#include <cmath>
#include <ostream>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/format.hpp"
#include "phaseprobe/kernels.hpp"
#include "phaseprobe/phase_propagation.hpp"

namespace phaseprobe {

namespace {

constexpr double kZeroNorm = 1e-15;

const ModelParams kUnitOscillator{0.0, 0.0, 1.0, 0.0, 0.0};

int grid_count(double lo, double hi, double step, const char *axis) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
        throw ContractViolation(std::string("wigner grid: empty ") + axis +
                                " range");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ContractViolation("wigner grid: step must be positive");
    }
    const double n = std::round((hi - lo) / step);
    if (n < 1.0 || n > 1e5) {
        throw ContractViolation(std::string("wigner grid: bad ") + axis +
                                " resolution");
    }
    return static_cast<int>(n) + 1;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        v[i] = lo + h * i;
    }
    v.back() = hi;
    return v;
}

} // namespace

FidelityProbeState::FidelityProbeState(const QubitPreparation &prep,
                                       CharFnState w0,
                                       const ModelParams &params,
                                       const Convention &conv)
    : prep_(prep), w0_(std::move(w0)), params_(params), conv_(conv),
      a1_(prep.coherence_norm1()), a2_(prep.coherence_norm2()) {
    prep_.validate();
    params_.validate();
}

double fidelity_amplitude(const FidelityProbeState &state, int which, double t,
                          FidelityMode mode) {
    if (which != 1 && which != 2) {
        throw ContractViolation("fidelity_amplitude: qubit must be 1 or 2");
    }
    const QubitPreparation &q = state.preparation();
    // <e_i| rho_qi |g_i> collects two elements of the two-qubit matrix
    const ElementIndex e1 = which == 1 ? ElementIndex{1, 3} : ElementIndex{1, 2};
    const ElementIndex e2 = which == 1 ? ElementIndex{2, 4} : ElementIndex{3, 4};
    const PhaseVec4 origin{};
    const cplx w =
        q.coefficient(e1.row, e1.col) *
            propagate_element(e1, state.initial(), origin, t, state.params(),
                              state.convention()) +
        q.coefficient(e2.row, e2.col) *
            propagate_element(e2, state.initial(), origin, t, state.params(),
                              state.convention());
    const double raw = std::norm(w);
    if (mode == FidelityMode::Raw) {
        return raw;
    }
    const double a = which == 1 ? state.a1() : state.a2();
    if (a < kZeroNorm) {
        throw UndefinedNormalizationError(
            "normalized fidelity needs a nonzero qubit coherence A_" +
            std::to_string(which));
    }
    return raw / (a * a);
}

double match_residual(const BellProbeState &bell,
                      const FidelityProbeState &fid, double t) {
    if (!(bell.params() == fid.params())) {
        throw ContractViolation("match_residual: probes use different models");
    }
    if (!(bell.convention() == fid.convention())) {
        throw ContractViolation(
            "match_residual: probes use different conventions");
    }
    if (!(bell.initial().spec() == fid.initial().spec())) {
        throw ContractViolation(
            "match_residual: probes start from different oscillator states");
    }
    const double f1 = fidelity_amplitude(fid, 1, t, FidelityMode::Normalized);
    const double f2 = fidelity_amplitude(fid, 2, t, FidelityMode::Normalized);
    return std::abs(concurrence(bell, t) - std::sqrt(f1 * f2));
}

// --- single pair ---------------------------------------------------------------

void SingleDephasingModel::validate() const {
    if (!std::isfinite(delta) || !std::isfinite(g)) {
        throw ContractViolation("single model: delta and g must be finite");
    }
    if (!(a >= 0.0 && a <= 1.0)) {
        throw ContractViolation("single model: population a outside [0, 1]");
    }
    if (std::norm(c) > a * (1.0 - a) + 1e-12) {
        throw ContractViolation("single model: |c|^2 exceeds a (1 - a)");
    }
}

cplx single_coherence(const SingleDephasingModel &model, double t,
                      const Convention &conv) {
    const PhaseVec2 xi = xi_vector(model.g, 0.0, t, kUnitOscillator).block1();
    const PhaseVec2 arg =
        transition_matrix(-t, kUnitOscillator).b1.apply(xi) * (-conv.kappa);
    return model.c * model.w0(arg) * std::polar(1.0, -model.delta * t);
}

double single_fidelity(const SingleDephasingModel &model, double t,
                       FidelityMode mode, const Convention &conv) {
    const double raw = std::norm(single_coherence(model, t, conv));
    if (mode == FidelityMode::Raw) {
        return raw;
    }
    const double c2 = std::norm(model.c);
    if (c2 < kZeroNorm * kZeroNorm) {
        throw UndefinedNormalizationError(
            "normalized echo needs a nonzero initial coherence");
    }
    return raw / c2;
}

double qubit_oscillator_i_concurrence(const SingleDephasingModel &model,
                                      double t, const Convention &conv) {
    const double f2 = std::norm(single_coherence(model, t, conv));
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * f2));
}

PhaseVec2 packet_offset(double g, double t) {
    const Block2 lt = lambda_matrix(-t, kUnitOscillator).b1.transposed();
    return lt.apply({0.0, g});
}

double WignerSnapshot::mass() const {
    if (x.size() < 2 || p.size() < 2) {
        return 0.0;
    }
    const double hx = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    const double hp = (p.back() - p.front()) / static_cast<double>(p.size() - 1);
    return kernels::sum(values.data(), values.size()) * hx * hp;
}

void WignerSnapshot::write_csv(std::ostream &os) const {
    os << "x,p,W\n";
    for (std::size_t j = 0; j < p.size(); ++j) {
        const std::string ps = format_double(p[j]);
        for (std::size_t i = 0; i < x.size(); ++i) {
            os << format_double(x[i]) << ',' << ps << ','
               << format_double(values[j * x.size() + i]) << '\n';
        }
    }
}

WignerSnapshot wigner_snapshot(const SingleDephasingModel &model, double t,
                               const WignerGrid &grid, WignerScale scale) {
    model.validate();
    if (!model.w0.is_vacuum()) {
        throw UnsupportedStateError(
            "Wigner closed form needs a vacuum oscillator; use the oracle");
    }
    const int nx = grid_count(grid.x_min, grid.x_max, grid.step, "x");
    const int np = grid_count(grid.p_min, grid.p_max, grid.step, "p");

    WignerSnapshot w;
    w.t = t;
    w.x = linspace(grid.x_min, grid.x_max, nx);
    w.p = linspace(grid.p_min, grid.p_max, np);
    w.d = packet_offset(model.g, t);
    w.centre = scale == WignerScale::Canonical ? w.d * kInvSqrt2 : w.d;
    w.values.resize(static_cast<std::size_t>(nx) * np);

    kernels::WignerRow row;
    row.cx = w.centre.k;
    row.cp = w.centre.s;
    row.w_plus = model.a;
    row.w_minus = 1.0 - model.a;
    for (int j = 0; j < np; ++j) {
        row.p = w.p[j];
        kernels::wigner_row(row, w.x.data(), w.values.data() +
                                                 static_cast<std::size_t>(j) * nx,
                            nx);
    }
    return w;
}

} // namespace phaseprobe
