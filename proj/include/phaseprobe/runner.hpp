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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phaseprobe/fidelity_probe.hpp"
#include "phaseprobe/scenario.hpp"

namespace phaseprobe {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitTruncation = 2,
    kExitCalibration = 3,
};

struct RunOptions {
    bool force_oracle = false; ///< run the oracle even if the file disables it
    bool drift_check = false;  ///< repeat the oracle at doubled truncation
};

struct SeriesSummary {
    std::size_t rows = 0;
    double max_cons_resid = 0.0;
    double max_match_resid = 0.0;
    double max_echo_resid = 0.0; ///< single pair: |-ln F - |d|^2|
    bool oracle = false;
    double max_dC = 0.0;
    double max_dF1 = 0.0;  ///< single pair: echo deviation
    double max_dF2 = 0.0;
    double max_dI = 0.0;   ///< single pair only
    double max_purity_dev = 0.0; ///< |tr rho^2 - (1 + C^2)/2|, Bell copy
    double max_leakage = 0.0;
    std::optional<double> drift; ///< max change of every observable, N -> 2N
};

/// Time series of one scenario. Two-pair header:
///   t,C,I,cons_resid,F1_raw,F2_raw,F1_norm,F2_norm,sqrtF1F2,match_resid
///   [,C_oracle,F1_oracle,F2_oracle,dC,dF1,dF2]
/// Single-pair header:
///   t,F_norm,F_raw,I,neg_log_F,d_norm2,echo_resid[,F_oracle,I_oracle,dF,dI]
struct ProbeSeries {
    std::string name;
    ScenarioKind kind = ScenarioKind::TwoPair;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    SeriesSummary summary;
};

/// Throws TruncationError when the oracle leaks beyond its tolerance.
ProbeSeries run_scenario(const Scenario &s, const RunOptions &opts = {});

void write_csv(const ProbeSeries &series, std::ostream &os);
/// Writes the CSV; I/O failures throw std::runtime_error naming the path.
void emit(const ProbeSeries &series, const std::filesystem::path &file);

struct ExpectationCheck {
    bool ok = true;
    std::string detail;
};

ExpectationCheck check_expectation(const Scenario &s, const ProbeSeries &series);

/// Snapshots at the requested times; throws ValidationError when the
/// scenario has no wigner block.
std::vector<WignerSnapshot> run_wigner(const Scenario &s);

/// File name of the k-th snapshot of a scenario.
std::string wigner_file_name(const Scenario &s, std::size_t k);

/// Sorted *.json files of the bundled scenario directory.
std::vector<std::filesystem::path> bundled_scenarios();
std::filesystem::path bundled_scenario_dir();

struct SuiteEntry {
    std::filesystem::path file;
    std::string name;
    std::optional<ProbeSeries> series;
    ExpectationCheck check;
    std::string error;
    int exit_code = kExitOk;
};

struct SuiteResult {
    std::vector<SuiteEntry> entries;
    /// Largest exit code over the entries.
    int exit_code() const;
};

/// Runs every file concurrently; results keep the input order. With a
/// non-empty out_dir each scenario writes its CSV (and Wigner grids) there,
/// followed by summary.csv.
SuiteResult run_suite(const std::vector<std::filesystem::path> &files,
                      const RunOptions &opts,
                      const std::filesystem::path &out_dir);

/// Fixed-width table, one line per scenario.
std::string summary_table(const SuiteResult &result);
void write_summary_csv(const SuiteResult &result, std::ostream &os);

} // namespace phaseprobe
