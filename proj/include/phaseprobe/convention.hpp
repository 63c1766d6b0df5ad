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

#include <numbers>

namespace phaseprobe {

/// Pair of scale conventions tying the closed forms to the Fock-space model.
///
/// `kappa` multiplies the displacement vector xi(t) wherever the closed
/// forms shift the argument of the characteristic function. `x_scale` is
/// the factor s in x = s (a + a^dagger) used by the Fock-space Hamiltonian.
/// The characteristic function itself is always tr[rho exp(i(k x + s p))]
/// in canonical quadratures, so the vacuum is exp(-|R|^2 / 4). Exact
/// dynamics requires kappa = 2 sqrt(2) x_scale.
struct Convention {
    double kappa = std::numbers::sqrt2;
    double x_scale = 0.5;

    /// Coupling seen by canonical quadratures, g * sqrt(2) * x_scale.
    double canonical_coupling(double g) const {
        return g * std::numbers::sqrt2 * x_scale;
    }

    bool operator==(const Convention &) const = default;
};

/// The pair selected by `calibrate`: the only candidate for which both the
/// closed-form echo and the Fock-space echo of a vacuum oscillator equal
/// exp(-4 g^2 sin^2(t/2)).
inline constexpr Convention kCalibrated{std::numbers::sqrt2, 0.5};

} // namespace phaseprobe
