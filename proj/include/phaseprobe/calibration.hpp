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

#include <string>
#include <vector>

#include "phaseprobe/convention.hpp"

namespace phaseprobe {

struct CalibrationOptions {
    std::vector<double> kappas;   ///< defaults to {1, sqrt 2, 2}
    std::vector<double> x_scales; ///< defaults to {1, 1/sqrt 2, 1/2}
    std::vector<double> couplings{0.5, 1.0};
    int time_steps = 64; ///< intervals on [0, 2 pi]
    int fock_levels = 60;
    double tolerance = 1e-6;

    static CalibrationOptions defaults();
};

/// One candidate (kappa, x_scale). Errors are maxima over the time grid
/// and all couplings.
struct CalibrationRow {
    Convention candidate;
    double oracle_error = 0.0;   ///< Fock echo vs exp(-4 g^2 sin^2(t/2))
    double analytic_error = 0.0; ///< closed-form echo vs the same target
    double coherent_error = 0.0; ///< closed form vs Fock coherence, coherent start
    bool passed = false;
};

struct CalibrationResult {
    std::vector<CalibrationRow> rows;
    CalibrationOptions options;

    std::vector<Convention> passing() const;
    /// The unique passing candidate; throws CalibrationError otherwise.
    Convention selected() const;
    /// Fock echo of the selected pair at g = 1, t = pi.
    double minimum_echo = 0.0;
};

/// Scores every candidate against the single-pair Fock oracle. The
/// coherent-state check uses g = 0.5, delta = 0.7 and centroid (0.6, -0.4).
CalibrationResult calibrate(const CalibrationOptions &opts =
                                CalibrationOptions::defaults());

/// Plain-text convention ledger: candidate table, verdict and the pair
/// compiled into the library.
std::string convention_ledger(const CalibrationResult &result);

} // namespace phaseprobe
