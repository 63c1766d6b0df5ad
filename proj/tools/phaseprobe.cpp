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

// phaseprobe: run scenarios, calibrate conventions, dump Wigner grids.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "phaseprobe/calibration.hpp"
#include "phaseprobe/errors.hpp"
#include "phaseprobe/format.hpp"
#include "phaseprobe/kernels.hpp"
#include "phaseprobe/runner.hpp"

namespace fs = std::filesystem;
using namespace phaseprobe;

namespace {

struct Flags {
    bool oracle = false;
    bool quiet = false;
    bool drift = false;
    std::string out = "out";
};

int report_failure(const std::exception &e, int code) {
    std::cerr << "phaseprobe: " << e.what() << '\n';
    return code;
}

int cmd_run(const std::string &config, const Flags &f) {
    const Scenario s = load_scenario(config);
    RunOptions opts;
    opts.force_oracle = f.oracle;
    opts.drift_check = f.drift;
    const ProbeSeries series = run_scenario(s, opts);
    fs::create_directories(f.out);
    const fs::path file = fs::path(f.out) / (s.output + ".csv");
    emit(series, file);
    const ExpectationCheck check = check_expectation(s, series);
    if (!f.quiet) {
        SuiteResult one;
        SuiteEntry e;
        e.file = config;
        e.name = s.name;
        e.series = series;
        e.check = check;
        e.exit_code = check.ok ? kExitOk : kExitValidation;
        e.error = check.detail;
        one.entries.push_back(std::move(e));
        std::cout << summary_table(one) << "wrote " << file.string() << '\n';
    }
    if (!check.ok) {
        std::cerr << "phaseprobe: expectation failed: " << check.detail << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_calibrate(const Flags &f) {
    const CalibrationResult res = calibrate();
    const std::string ledger = convention_ledger(res);
    fs::create_directories(f.out);
    const fs::path file = fs::path(f.out) / "convention_ledger.txt";
    {
        std::ofstream os(file, std::ios::binary | std::ios::trunc);
        os << ledger;
        if (!os) {
            throw std::runtime_error(file.string() + ": write failed");
        }
    }
    if (!f.quiet) {
        std::cout << ledger << "wrote " << file.string() << '\n';
    }
    const Convention sel = res.selected(); // throws CalibrationError
    if (!(sel == kCalibrated)) {
        throw CalibrationError(
            "calibrated pair differs from the compiled convention");
    }
    return kExitOk;
}

int cmd_wigner(const std::string &config, const Flags &f) {
    const Scenario s = load_scenario(config);
    const auto snaps = run_wigner(s);
    fs::create_directories(f.out);
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        const fs::path file = fs::path(f.out) / wigner_file_name(s, k);
        std::ofstream os(file, std::ios::binary | std::ios::trunc);
        snaps[k].write_csv(os);
        if (!os) {
            throw std::runtime_error(file.string() + ": write failed");
        }
        if (!f.quiet) {
            std::cout << "t = " << format_double(snaps[k].t)
                      << "  |d| = " << format_double(snaps[k].d.norm())
                      << "  separation = "
                      << format_double(2.0 * snaps[k].centre.norm())
                      << "  mass = " << format_double(snaps[k].mass())
                      << "  -> " << file.string() << '\n';
        }
    }
    return kExitOk;
}

int cmd_suite(const Flags &f) {
    RunOptions opts;
    opts.force_oracle = f.oracle;
    opts.drift_check = f.drift;
    const auto files = bundled_scenarios();
    if (files.empty()) {
        std::cerr << "phaseprobe: no bundled scenarios in "
                  << bundled_scenario_dir().string() << '\n';
        return kExitValidation;
    }
    const SuiteResult res = run_suite(files, opts, f.out);
    if (!f.quiet) {
        std::cout << summary_table(res) << "kernels: "
                  << kernels::isa_name(kernels::active_isa()) << ", wrote "
                  << f.out << '\n';
    }
    for (const auto &e : res.entries) {
        if (e.exit_code != kExitOk) {
            std::cerr << "phaseprobe: " << e.name << ": " << e.error << '\n';
        }
    }
    return res.exit_code();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"phaseprobe: dephasing qubit-oscillator probes"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_flag("--oracle", f.oracle, "also run the Fock-space oracle");
    app.add_flag("--drift", f.drift,
                 "repeat the oracle at doubled truncation");
    app.add_option("--out", f.out, "output directory")->capture_default_str();
    app.add_flag("--quiet", f.quiet, "suppress the summary on stdout");

    std::string config;
    auto *run = app.add_subcommand("run", "run one scenario file");
    run->add_option("config", config, "scenario JSON")->required();
    auto *cal = app.add_subcommand(
        "calibrate", "fix the (kappa, x_scale) convention against the oracle");
    auto *wig = app.add_subcommand("wigner", "write Wigner grids of a scenario");
    wig->add_option("config", config, "scenario JSON")->required();
    auto *suite = app.add_subcommand("suite", "run all bundled scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config, f);
        }
        if (cal->parsed()) {
            return cmd_calibrate(f);
        }
        if (wig->parsed()) {
            return cmd_wigner(config, f);
        }
        if (suite->parsed()) {
            return cmd_suite(f);
        }
    } catch (const TruncationError &e) {
        std::cerr << "phaseprobe: " << e.what() << " (suggested n1 = "
                  << e.suggested_n1() << ", n2 = " << e.suggested_n2() << ")\n";
        return kExitTruncation;
    } catch (const CalibrationError &e) {
        return report_failure(e, kExitCalibration);
    } catch (const std::exception &e) {
        return report_failure(e, kExitValidation);
    }
    return kExitValidation;
}
