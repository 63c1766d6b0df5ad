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
#include "phaseprobe/bell_probe.hpp"

#include <cmath>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/phase_propagation.hpp"

namespace phaseprobe {

namespace {

constexpr double kZeroProbability = 1e-14;

} // namespace

void QubitPreparation::validate() const {
    const double n1 = std::norm(a1) + std::norm(b1);
    const double n2 = std::norm(a2) + std::norm(b2);
    if (!std::isfinite(n1) || !std::isfinite(n2) ||
        std::abs(n1 - 1.0) > 1e-10 || std::abs(n2 - 1.0) > 1e-10) {
        throw ContractViolation(
            "qubit amplitudes must satisfy |a_i|^2 + |b_i|^2 = 1");
    }
}

BellProbeState bell_project(const QubitPreparation &prep, const CharFnState &w0,
                            const ModelParams &params, const Convention &conv) {
    prep.validate();
    params.validate();
    // P rho P restricted to qubits: (c22 + c33 + c23 + c32) / 2
    const double success =
        0.5 * (prep.coefficient(2, 2) + prep.coefficient(3, 3) +
               prep.coefficient(2, 3) + prep.coefficient(3, 2))
                  .real();
    if (!(success > kZeroProbability)) {
        throw ZeroProbabilityError(
            "Bell projection annihilates the prepared qubit state");
    }
    return BellProbeState(w0, params, conv, success);
}

cplx coherence_f(const BellProbeState &state, double t) {
    return state.norm() * propagate_element({2, 3}, state.initial(),
                                            PhaseVec4{}, t, state.params(),
                                            state.convention());
}

double concurrence(const BellProbeState &state, double t) {
    return 2.0 * std::abs(coherence_f(state, t));
}

double i_concurrence(const BellProbeState &state, double t) {
    const double f2 = std::norm(coherence_f(state, t));
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * f2));
}

std::array<std::array<cplx, 4>, 4> two_qubit_state(const BellProbeState &state,
                                                   double t) {
    std::array<std::array<cplx, 4>, 4> rho{};
    const cplx f = coherence_f(state, t);
    for (int i : {2, 3}) {
        rho[i - 1][i - 1] =
            state.norm() * propagate_element({i, i}, state.initial(),
                                             PhaseVec4{}, t, state.params(),
                                             state.convention());
    }
    rho[1][2] = f;
    rho[2][1] = std::conj(f);
    return rho;
}

} // namespace phaseprobe
