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
#include "phaseprobe/format.hpp"

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phaseprobe/bell_probe.hpp"
#include "phaseprobe/calibration.hpp"
#include "phaseprobe/fidelity_probe.hpp"
#include "phaseprobe/fock_oracle.hpp"
#include "phaseprobe/format.hpp"
#include "phaseprobe/phase_propagation.hpp"
#include "phaseprobe/runner.hpp"
#include "phaseprobe/scenario.hpp"

using namespace phaseprobe;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

int failures = 0;

void report(int id, const char *title, bool ok, const std::string &detail) {
    std::printf("%s %2d  %-28s %s\n", ok ? "PASS" : "FAIL", id, title,
                detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

bool is_separable(const std::string &name) {
    return name.find("separable") != std::string::npos;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

// --- criteria -----------------------------------------------------------

void calibration() {
    const CalibrationResult res = calibrate();
    const auto pass = res.passing();
    bool ok = pass.size() == 1 && pass.front() == kCalibrated;
    double worst = 0.0;
    for (const auto &row : res.rows) {
        if (row.passed) {
            worst = std::max({row.oracle_error, row.analytic_error,
                              row.coherent_error});
        }
    }
    const double echo_err = std::abs(res.minimum_echo - std::exp(-4.0));
    ok = ok && worst < 1e-6 && echo_err < 1e-6;
    report(1, "calibration", ok,
           std::to_string(pass.size()) + " passing pair(s), kappa = " +
               format_double(kCalibrated.kappa) + ", x_scale = " +
               format_double(kCalibrated.x_scale) + ", echo error " +
               num(worst) + ", F(pi) - e^-4 = " + num(echo_err));
}

void conservation(const SuiteResult &suite) {
    double cons = 0.0, purity = 0.0, di = 0.0;
    bool ok = true;
    for (const auto &e : suite.entries) {
        if (!e.series) {
            ok = false;
            continue;
        }
        const auto &s = e.series->summary;
        if (e.series->kind == ScenarioKind::TwoPair) {
            cons = std::max(cons, s.max_cons_resid);
            ok = ok && s.oracle;
            purity = std::max(purity, s.max_purity_dev);
        } else if (s.oracle) {
            di = std::max(di, s.max_dI);
        }
    }
    ok = ok && cons < 1e-12 && purity < 1e-6 && di < 1e-6;
    report(2, "conservation C^2 + I^2 = 1", ok,
           "max |C^2 + I^2 - 1| = " + num(cons) +
               ", oracle purity deviation = " + num(purity) +
               ", single-pair |dI| = " + num(di));
}

void separability(const SuiteResult &suite) {
    int n = 0;
    double worst = 0.0;
    bool ok = true;
    for (const auto &e : suite.entries) {
        if (!e.series || e.series->kind != ScenarioKind::TwoPair ||
            !is_separable(e.name)) {
            continue;
        }
        ++n;
        worst = std::max(worst, e.series->summary.max_match_resid);
        ok = ok && e.check.ok;
    }
    ok = ok && n == 4 && worst < 1e-10;
    report(3, "separable match", ok,
           std::to_string(n) + " scenarios, max |C - sqrt(F1 F2)| = " +
               num(worst));
}

void mismatch(const SuiteResult &suite) {
    int n = 0;
    bool ok = true;
    std::string detail;
    for (const auto &e : suite.entries) {
        if (!e.series || e.series->kind != ScenarioKind::TwoPair ||
            is_separable(e.name)) {
            continue;
        }
        ++n;
        const Scenario s = load_scenario(e.file);
        const double th = s.expect.mismatch_threshold.value_or(0.0);
        const double m = e.series->summary.max_match_resid;
        ok = ok && th > 1e-3 && m > th && e.check.ok;
        detail += " " + e.name + " " + num(m) + " > " + num(th) + ";";
    }
    ok = ok && n == 4;
    report(4, "entangled mismatch", ok, std::to_string(n) + " scenarios:" + detail);
}

void oracle_equivalence(const SuiteResult &suite) {
    double dc = 0.0, df1 = 0.0, df2 = 0.0, drift = 0.0;
    int n = 0;
    bool ok = true;
    std::string sizes;
    for (const auto &e : suite.entries) {
        if (!e.series) {
            ok = false;
            continue;
        }
        const auto &s = e.series->summary;
        if (!s.oracle) {
            continue;
        }
        ++n;
        dc = std::max(dc, s.max_dC);
        df1 = std::max(df1, s.max_dF1);
        df2 = std::max(df2, s.max_dF2);
        if (!s.drift) {
            ok = false;
        } else {
            drift = std::max(drift, *s.drift);
        }
        const Scenario sc = load_scenario(e.file);
        const bool echo = sc.kind == ScenarioKind::Single && sc.single.g >= 1.0;
        const int want = echo ? 50 : 40;
        ok = ok && sc.oracle.n1 >= want;
    }
    ok = ok && n == static_cast<int>(suite.entries.size()) && dc < 1e-6 &&
         df1 < 1e-6 && df2 < 1e-6 && drift < 1e-7;
    report(5, "oracle equivalence", ok,
           std::to_string(n) + " scenarios, max |dC| = " + num(dc) +
               ", |dF1| = " + num(df1) + ", |dF2| = " + num(df2) +
               ", N -> 2N drift = " + num(drift));
}

void revival(const std::vector<fs::path> &files) {
    int n = 0;
    double at0 = 0.0, at2pi = 0.0;
    for (const auto &f : files) {
        const Scenario s = load_scenario(f);
        if (s.kind != ScenarioKind::TwoPair || s.model.omega2 != 1.0) {
            continue;
        }
        ++n;
        const auto b = bell_project(s.qubits, make_state(s.state), s.model);
        at0 = std::max(at0, std::abs(concurrence(b, 0.0) - 1.0));
        at2pi = std::max(at2pi, std::abs(concurrence(b, 2 * kPi) - 1.0));
    }
    report(6, "Bell revival", n == 4 && at0 < 1e-12 && at2pi < 1e-10,
           std::to_string(n) + " scenarios with Omega = 1, |C(0) - 1| = " +
               num(at0) + ", |C(2 pi) - 1| = " + num(at2pi));
}

double max_abs(const BlockMatrix4 &a, const BlockMatrix4 &b) {
    const auto da = a.dense();
    const auto db = b.dense();
    double m = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m = std::max(m, std::abs(da[i][j] - db[i][j]));
        }
    }
    return m;
}

void transition_laws() {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    ModelParams p;
    p.omega2 = kPi;
    double group = 0.0, inverse = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = u(gen), s = u(gen);
        const auto phi = transition_matrix(t, p);
        group = std::max(group, max_abs(transition_matrix(t + s, p),
                                        phi * transition_matrix(s, p)));
        inverse = std::max(inverse, max_abs(phi * transition_matrix(-t, p),
                                            BlockMatrix4::identity()));
    }
    report(7, "transition-matrix laws", group < 1e-12 && inverse < 1e-12,
           "100 draws, group law " + num(group) + ", inverse law " +
               num(inverse));
}

void charfn_contracts(const std::vector<fs::path> &files) {
    std::vector<StateSpec> specs;
    std::vector<StateFamily> seen;
    for (const auto &f : files) {
        const Scenario s = load_scenario(f);
        if (s.kind != ScenarioKind::TwoPair) {
            continue;
        }
        const auto w = make_state(s.state);
        if (std::find(seen.begin(), seen.end(), w.family()) == seen.end()) {
            seen.push_back(w.family());
            specs.push_back(s.state);
        }
    }
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const double axis[5] = {-1.6, -0.7, 0.0, 0.5, 1.3};
    double origin = 0.0, herm = 0.0, grid = 0.0;
    for (const auto &spec : specs) {
        const auto w = make_state(spec);
        origin = std::max(origin, std::abs(w({}) - 1.0));
        for (int i = 0; i < 200; ++i) {
            const PhaseVec4 R{u(gen), u(gen), u(gen), u(gen)};
            herm = std::max(herm, std::abs(w(-R) - std::conj(w(R))));
        }
        const CMatrix amp = oscillator_amplitudes(spec, 60, 60);
        for (double a : axis)
            for (double b : axis)
                for (double c : axis)
                    for (double d : axis) {
                        const PhaseVec4 R{a, b, c, d};
                        grid = std::max(
                            grid, std::abs(w(R) - charfn_sample_pure(amp, R)));
                    }
    }
    report(8, "characteristic functions",
           specs.size() == 4 && origin < 1e-12 && herm < 1e-12 && grid < 1e-8,
           std::to_string(specs.size()) + " families, |w(0) - 1| = " +
               num(origin) + ", Hermiticity " + num(herm) +
               ", oracle grid 5^4 " + num(grid));
}

void wigner(const std::vector<fs::path> &files, const SuiteResult &suite) {
    double sep = 1.0, mass = 1.0, echo = 0.0;
    bool have_pi = false;
    for (const auto &f : files) {
        const Scenario s = load_scenario(f);
        if (s.kind != ScenarioKind::Single || !s.wigner) {
            continue;
        }
        mass = 0.0;
        for (const auto &w : run_wigner(s)) {
            mass = std::max(mass, std::abs(w.mass() - 1.0));
            if (std::abs(w.t - kPi) < 1e-12 &&
                s.wigner->scale == WignerScale::Literal) {
                have_pi = true;
                sep = std::abs(2 * w.centre.norm() - 4 * s.single.g);
            }
        }
    }
    int singles = 0;
    for (const auto &e : suite.entries) {
        if (e.series && e.series->kind == ScenarioKind::Single) {
            ++singles;
            echo = std::max(echo, e.series->summary.max_echo_resid);
        }
    }
    report(9, "Wigner data",
           have_pi && sep < 1e-10 && mass < 0.01 && singles > 0 && echo < 1e-10,
           "|2|d(pi)| - 4g| = " + num(sep) + ", max |mass - 1| = " +
               num(mass) + ", max |-ln F - |d|^2| = " + num(echo));
}

void determinism(const std::vector<fs::path> &files, const fs::path &root) {
    const fs::path a = root / "run_a";
    const fs::path b = root / "run_b";
    (void)run_suite(files, {}, a);
    (void)run_suite(files, {}, b);
    std::vector<fs::path> names;
    for (const auto &entry : fs::directory_iterator(a)) {
        names.push_back(entry.path().filename());
    }
    std::size_t in_b = 0;
    for (const auto &entry : fs::directory_iterator(b)) {
        (void)entry;
        ++in_b;
    }
    int differ = 0;
    for (const auto &n : names) {
        if (!fs::exists(b / n) || slurp(a / n) != slurp(b / n)) {
            ++differ;
        }
    }
    report(10, "determinism",
           !names.empty() && differ == 0 && in_b == names.size(),
           std::to_string(names.size()) + " files compared, " +
               std::to_string(differ) + " differ");
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const fs::path root = fs::temp_directory_path() / "phaseprobe_acceptance";
    fs::remove_all(root);
    fs::create_directories(root);

    try {
        const auto files = bundled_scenarios();
        RunOptions opts;
        opts.force_oracle = true;
        opts.drift_check = true;
        const SuiteResult suite = run_suite(files, opts, root / "drift");
        for (const auto &e : suite.entries) {
            if (!e.error.empty()) {
                std::printf("note: %s: %s\n", e.name.c_str(), e.error.c_str());
            }
        }

        calibration();
        conservation(suite);
        separability(suite);
        mismatch(suite);
        oracle_equivalence(suite);
        revival(files);
        transition_laws();
        charfn_contracts(files);
        wigner(files, suite);
        determinism(files, root);
    } catch (const std::exception &e) {
        std::printf("FAIL     acceptance aborted: %s\n", e.what());
        return 1;
    }

    fs::remove_all(root);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%d of 10 criteria failed, %.1f s\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
