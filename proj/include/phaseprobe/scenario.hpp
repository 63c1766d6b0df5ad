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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phaseprobe/fidelity_probe.hpp"
#include "phaseprobe/initial_states.hpp"
#include "phaseprobe/phase_space.hpp"
#include "phaseprobe/qubits.hpp"

namespace phaseprobe {

inline constexpr std::string_view kScenarioSchema = "phaseprobe.scenario/1";

enum class ScenarioKind { TwoPair, Single };

/// Inclusive grid t_i = t_max i / steps, i = 0..steps.
struct TimeGrid {
    double t_max = 12.566370614359172; // 4 pi
    int steps = 400;

    std::vector<double> points() const;
};

struct OracleOptions {
    bool enabled = false;
    int n1 = 40;
    int n2 = 40; ///< unused by single-pair runs
    double tolerance = 1e-10;
};

/// Single qubit-oscillator pair, qubit a_e |e> + a_g |g>.
struct SinglePairSpec {
    double delta = 0.0;
    double g = 0.0;
    cplx a_e{kInvSqrt2, 0.0};
    cplx a_g{kInvSqrt2, 0.0};
    SingleModeSpec oscillator = CoherentMode{};

    SingleDephasingModel model() const;
};

struct WignerRequest {
    std::vector<double> times;
    WignerGrid grid;
    WignerScale scale = WignerScale::Literal;
};

/// Regression expectation attached to a bundled scenario.
struct Expectation {
    bool separable = false; ///< max match residual below 1e-10
    std::optional<double> mismatch_threshold; ///< max match residual above
};

struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::TwoPair;

    ModelParams model;
    QubitPreparation qubits;
    StateSpec state = GaussianParams{};

    SinglePairSpec single;

    TimeGrid time;
    OracleOptions oracle;
    FidelityMode fidelity_mode = FidelityMode::Normalized;
    std::optional<WignerRequest> wigner;
    Expectation expect;
    std::string output; ///< file stem, defaults to name
};

/// Parses and validates a scenario document. Errors are ValidationError
/// with the offending field path, e.g. "model.g1" or "state.n1".
Scenario parse_scenario(std::string_view json_text);

/// Reads `path` and parses it; the path is prefixed to error messages.
Scenario load_scenario(const std::filesystem::path &path);

} // namespace phaseprobe
