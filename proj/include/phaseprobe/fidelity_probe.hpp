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
#include <iosfwd>
#include <vector>

#include "phaseprobe/bell_probe.hpp"
#include "phaseprobe/convention.hpp"
#include "phaseprobe/initial_states.hpp"
#include "phaseprobe/qubits.hpp"

namespace phaseprobe {

enum class FidelityMode { Normalized, Raw };

/// Unprojected copy of the protocol.
class FidelityProbeState {
  public:
    FidelityProbeState(const QubitPreparation &prep, CharFnState w0,
                       const ModelParams &params,
                       const Convention &conv = kCalibrated);

    const QubitPreparation &preparation() const noexcept { return prep_; }
    const CharFnState &initial() const noexcept { return w0_; }
    const ModelParams &params() const noexcept { return params_; }
    const Convention &convention() const noexcept { return conv_; }

    /// A1 = |c13 + c24|, A2 = |c12 + c34|.
    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }

  private:
    QubitPreparation prep_;
    CharFnState w0_;
    ModelParams params_;
    Convention conv_;
    double a1_;
    double a2_;
};

/// F_q1 = |w13(0, t) + w24(0, t)|^2 (which = 1) or F_q2 = |w12 + w34|^2
/// (which = 2); normalized mode divides by A_i^2. Throws
/// UndefinedNormalizationError for normalized mode with A_i = 0 and
/// ContractViolation for `which` outside {1, 2}.
double fidelity_amplitude(const FidelityProbeState &state, int which, double t,
                          FidelityMode mode = FidelityMode::Normalized);

/// |C(t) - sqrt(F_q1 F_q2)| with normalized fidelities. Both probes must
/// share model parameters, convention and initial state.
double match_residual(const BellProbeState &bell,
                      const FidelityProbeState &fid, double t);

// --- single qubit-oscillator pair ---------------------------------------------

/// H = delta/2 sigma_z + n + 1/2 + g sigma_z x with qubit populations a
/// (excited) and 1 - a and coherence c = <e| rho_q |g>.
struct SingleDephasingModel {
    double delta = 0.0;
    double g = 0.0;
    double a = 0.5;
    cplx c{0.5, 0.0};
    SingleModeCharFn w0{CoherentMode{}};

    /// Throws ContractViolation unless 0 <= a <= 1 and |c|^2 <= a (1 - a).
    void validate() const;
};

/// f_q(t) = <e| rho_q(t) |g> = c w0(-kappa Phi^-1(t) xi_g(t)) e^{-i delta t}.
cplx single_coherence(const SingleDephasingModel &model, double t,
                      const Convention &conv = kCalibrated);

/// |f_q(t)|^2 / |c|^2, or |f_q|^2 in raw mode.
double single_fidelity(const SingleDephasingModel &model, double t,
                       FidelityMode mode = FidelityMode::Normalized,
                       const Convention &conv = kCalibrated);

/// sqrt(1 - 4 |f_q(t)|^2).
double qubit_oscillator_i_concurrence(const SingleDephasingModel &model,
                                      double t,
                                      const Convention &conv = kCalibrated);

/// Packet offset d(t) = g Lambda^T(-t) e_s; |d(t)| = 2 g |sin(t/2)|.
PhaseVec2 packet_offset(double g, double t);

/// Centre placement of the two Wigner packets. Literal puts them at +-d(t)
/// with W = a/pi exp(-|x - d|^2) + (1 - a)/pi exp(-|x + d|^2); Canonical
/// rescales the centres to +-d(t)/sqrt 2, the packet positions of the
/// calibrated Hamiltonian in canonical quadratures.
enum class WignerScale { Literal, Canonical };

struct WignerGrid {
    double x_min = -6.0;
    double x_max = 6.0;
    double p_min = -6.0;
    double p_max = 6.0;
    double step = 0.05;
};

struct WignerSnapshot {
    double t = 0.0;
    std::vector<double> x;      ///< grid abscissae
    std::vector<double> p;      ///< grid ordinates
    std::vector<double> values; ///< W(x[i], p[j]) at j * x.size() + i
    PhaseVec2 d;                ///< packet offset d(t), components (x, p)
    PhaseVec2 centre;           ///< centre of the excited-state packet

    /// Riemann sum of W over the grid.
    double mass() const;
    /// Writes "x,p,W" rows with 17 significant digits.
    void write_csv(std::ostream &os) const;
};

/// Throws UnsupportedStateError unless the oscillator starts in vacuum, and
/// ContractViolation for an empty or malformed grid.
WignerSnapshot wigner_snapshot(const SingleDephasingModel &model, double t,
                               const WignerGrid &grid = {},
                               WignerScale scale = WignerScale::Literal);

} // namespace phaseprobe
