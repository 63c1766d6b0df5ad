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

#include <array>
#include <complex>

#include "phaseprobe/convention.hpp"
#include "phaseprobe/initial_states.hpp"
#include "phaseprobe/qubits.hpp"

namespace phaseprobe {

/// Two-qubit state after projecting onto Psi+ = (|g1e2> + |e1g2>)/sqrt 2,
/// renormalized so the populations of |2> and |3> are 1/2 each.
class BellProbeState {
  public:
    const CharFnState &initial() const noexcept { return w0_; }
    const ModelParams &params() const noexcept { return params_; }
    const Convention &convention() const noexcept { return conv_; }

    /// Weight of the projected profile, chi(0) = A = 1/2.
    double norm() const noexcept { return 0.5; }
    /// |<Psi+|psi_q>|^2 of the preparation.
    double success_probability() const noexcept { return success_; }

    /// Oscillator profile chi(R) = A w0(R) of the projected state.
    cplx chi(const PhaseVec4 &R) const { return norm() * w0_(R); }

  private:
    friend BellProbeState bell_project(const QubitPreparation &,
                                       const CharFnState &,
                                       const ModelParams &,
                                       const Convention &);
    BellProbeState(CharFnState w0, ModelParams params, Convention conv,
                   double success)
        : w0_(std::move(w0)), params_(params), conv_(conv),
          success_(success) {}

    CharFnState w0_;
    ModelParams params_;
    Convention conv_;
    double success_;
};

/// Throws ZeroProbabilityError when the preparation is orthogonal to Psi+.
BellProbeState bell_project(const QubitPreparation &prep, const CharFnState &w0,
                            const ModelParams &params,
                            const Convention &conv = kCalibrated);

/// f(t) = <2| rho_q1q2(t) |3> = A w0(-kappa Phi^-1(t) xi_{-g1,g2}(t)) e^{i Delta12 t}.
cplx coherence_f(const BellProbeState &state, double t);

/// 2 |f(t)|.
double concurrence(const BellProbeState &state, double t);

/// sqrt(1 - 4 |f(t)|^2).
double i_concurrence(const BellProbeState &state, double t);

/// Evolved two-qubit X-state: 1/2 on the |2>, |3> populations, f and
/// conj(f) on the central off-diagonal, zero elsewhere. Row-major.
std::array<std::array<cplx, 4>, 4> two_qubit_state(const BellProbeState &state,
                                                   double t);

} // namespace phaseprobe
