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
#include "phaseprobe/calibration.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/fidelity_probe.hpp"
#include "phaseprobe/fock_oracle.hpp"
#include "phaseprobe/format.hpp"

namespace phaseprobe {

namespace {

constexpr double kCoherentG = 0.5;
constexpr double kCoherentDelta = 0.7;
constexpr CoherentMode kCoherentStart{0.6, -0.4};

double target_echo(double g, double t) {
    const double s = std::sin(0.5 * t);
    return std::exp(-4.0 * g * g * s * s);
}

double oracle_echo(const SingleModelOracle &orc, double t) {
    // |c|^2 = 1/4 for the maximal superposition
    return 4.0 * std::norm(orc.sample(t).coherence);
}

} // namespace

CalibrationOptions CalibrationOptions::defaults() {
    CalibrationOptions o;
    o.kappas = {1.0, std::numbers::sqrt2, 2.0};
    o.x_scales = {1.0, 1.0 / std::numbers::sqrt2, 0.5};
    return o;
}

std::vector<Convention> CalibrationResult::passing() const {
    std::vector<Convention> out;
    for (const auto &r : rows) {
        if (r.passed) {
            out.push_back(r.candidate);
        }
    }
    return out;
}

Convention CalibrationResult::selected() const {
    const auto ok = passing();
    if (ok.size() != 1) {
        throw CalibrationError("calibration found " + std::to_string(ok.size()) +
                               " passing (kappa, x_scale) pairs, expected 1");
    }
    return ok.front();
}

CalibrationResult calibrate(const CalibrationOptions &opts) {
    CalibrationResult res;
    res.options = opts;
    const cplx half(kInvSqrt2, 0.0);
    const int n = opts.fock_levels;

    for (double xs : opts.x_scales) {
        // Fock quantities depend on x_scale only
        double oracle_err = 0.0;
        for (double g : opts.couplings) {
            const SingleModelOracle orc(0.0, g, half, half, CoherentMode{}, n,
                                        xs, 1e-9);
            for (int i = 0; i <= opts.time_steps; ++i) {
                const double t = 2.0 * std::numbers::pi * i / opts.time_steps;
                oracle_err = std::max(
                    oracle_err, std::abs(oracle_echo(orc, t) - target_echo(g, t)));
            }
        }
        const cplx ae(0.6, 0.0);
        const cplx ag(0.0, 0.8);
        const SingleModelOracle coh(kCoherentDelta, kCoherentG, ae, ag,
                                    kCoherentStart, n, xs, 1e-9);

        for (double kappa : opts.kappas) {
            CalibrationRow row;
            row.candidate = {kappa, xs};
            row.oracle_error = oracle_err;
            for (double g : opts.couplings) {
                SingleDephasingModel m;
                m.g = g;
                for (int i = 0; i <= opts.time_steps; ++i) {
                    const double t =
                        2.0 * std::numbers::pi * i / opts.time_steps;
                    row.analytic_error = std::max(
                        row.analytic_error,
                        std::abs(single_fidelity(m, t, FidelityMode::Normalized,
                                                 row.candidate) -
                                 target_echo(g, t)));
                }
            }
            SingleDephasingModel mc;
            mc.delta = kCoherentDelta;
            mc.g = kCoherentG;
            mc.a = std::norm(ae);
            mc.c = ae * std::conj(ag);
            mc.w0 = SingleModeCharFn(kCoherentStart);
            for (int i = 0; i <= opts.time_steps; ++i) {
                const double t = 2.0 * std::numbers::pi * i / opts.time_steps;
                row.coherent_error = std::max(
                    row.coherent_error,
                    std::abs(single_coherence(mc, t, row.candidate) -
                             coh.sample(t).coherence));
            }
            row.passed = row.oracle_error < opts.tolerance &&
                         row.analytic_error < opts.tolerance &&
                         row.coherent_error < opts.tolerance;
            res.rows.push_back(row);
        }
    }

    const auto ok = res.passing();
    if (ok.size() == 1) {
        const SingleModelOracle orc(0.0, 1.0, half, half, CoherentMode{}, n,
                                    ok.front().x_scale, 1e-9);
        res.minimum_echo = oracle_echo(orc, std::numbers::pi);
    } else {
        res.minimum_echo = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

std::string convention_ledger(const CalibrationResult &result) {
    std::ostringstream os;
    os << "phaseprobe convention ledger\n\n";
    os << "characteristic function: w(R) = tr[rho exp(i(k x + s p))], "
          "canonical quadratures, vacuum exp(-|R|^2/4)\n";
    os << "target echo: exp(-4 g^2 sin^2(t/2)), g in {";
    for (std::size_t i = 0; i < result.options.couplings.size(); ++i) {
        os << (i ? ", " : "") << format_double(result.options.couplings[i]);
    }
    os << "}, t in [0, 2 pi], " << result.options.time_steps + 1
       << " points, Fock levels " << result.options.fock_levels
       << ", tolerance " << format_double(result.options.tolerance) << "\n\n";
    os << "kappa,x_scale,oracle_error,analytic_error,coherent_error,passed\n";
    for (const auto &r : result.rows) {
        os << format_double(r.candidate.kappa) << ','
           << format_double(r.candidate.x_scale) << ','
           << format_double(r.oracle_error) << ','
           << format_double(r.analytic_error) << ','
           << format_double(r.coherent_error) << ','
           << (r.passed ? "yes" : "no") << '\n';
    }
    const auto ok = result.passing();
    os << "\npassing pairs: " << ok.size() << '\n';
    if (ok.size() == 1) {
        os << "selected: kappa = " << format_double(ok.front().kappa)
           << ", x_scale = " << format_double(ok.front().x_scale) << '\n';
        os << "echo at g = 1, t = pi: " << format_double(result.minimum_echo)
           << " (exp(-4) = " << format_double(std::exp(-4.0)) << ")\n";
        os << "compiled default: kappa = " << format_double(kCalibrated.kappa)
           << ", x_scale = " << format_double(kCalibrated.x_scale)
           << (ok.front() == kCalibrated ? " (matches)" : " (MISMATCH)")
           << '\n';
    } else {
        os << "verdict: FAILED, expected exactly one passing pair\n";
    }
    return os.str();
}

} // namespace phaseprobe
