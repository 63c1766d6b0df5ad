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
#include "phaseprobe/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "phaseprobe/bell_probe.hpp"
#include "phaseprobe/errors.hpp"
#include "phaseprobe/fock_oracle.hpp"
#include "phaseprobe/format.hpp"

#ifndef PHASEPROBE_SCENARIO_DIR
#define PHASEPROBE_SCENARIO_DIR "scenarios"
#endif

namespace phaseprobe {

namespace {

constexpr double kSeparableBound = 1e-10;

void track(double &acc, double v) { acc = std::max(acc, std::abs(v)); }

ProbeSeries run_two_pair(const Scenario &s, const RunOptions &opts) {
    const CharFnState w0 = make_state(s.state);
    const BellProbeState bell = bell_project(s.qubits, w0, s.model);
    const FidelityProbeState fid(s.qubits, w0, s.model);
    const bool oracle = s.oracle.enabled || opts.force_oracle;

    ProbeSeries out;
    out.name = s.name;
    out.kind = ScenarioKind::TwoPair;
    out.header = {"t",       "C",       "I",       "cons_resid", "F1_raw",
                  "F2_raw",  "F1_norm", "F2_norm", "sqrtF1F2",   "match_resid"};
    if (oracle) {
        for (const char *h :
             {"C_oracle", "F1_oracle", "F2_oracle", "dC", "dF1", "dF2"}) {
            out.header.emplace_back(h);
        }
    }

    std::optional<ProtocolOracle> orc;
    std::optional<ProtocolOracle> orc2;
    if (oracle) {
        const FockConfig cfg{s.oracle.n1, s.oracle.n2, s.oracle.tolerance};
        orc.emplace(s.model, s.state, s.qubits, cfg);
        if (opts.drift_check) {
            orc2.emplace(s.model, s.state, s.qubits,
                         FockConfig{2 * cfg.n1, 2 * cfg.n2, cfg.tolerance});
        }
    }
    const double a1sq = fid.a1() * fid.a1();
    const double a2sq = fid.a2() * fid.a2();
    const bool norm_mode = s.fidelity_mode == FidelityMode::Normalized;

    SeriesSummary &sum = out.summary;
    sum.oracle = oracle;
    if (orc2) {
        sum.drift = 0.0;
    }
    for (double t : s.time.points()) {
        const double c = concurrence(bell, t);
        const double i = i_concurrence(bell, t);
        const double cons = std::abs(c * c + i * i - 1.0);
        const double f1r = fidelity_amplitude(fid, 1, t, FidelityMode::Raw);
        const double f2r = fidelity_amplitude(fid, 2, t, FidelityMode::Raw);
        const double f1n = f1r / a1sq;
        const double f2n = f2r / a2sq;
        const double root = std::sqrt(f1n * f2n);
        const double match = std::abs(c - root);
        std::vector<double> row{t, c, i, cons, f1r, f2r, f1n, f2n, root, match};
        track(sum.max_cons_resid, cons);
        track(sum.max_match_resid, match);

        if (orc) {
            const OracleSample o = orc->sample(t);
            const double of1 = norm_mode ? o.fidelity1_raw / a1sq : o.fidelity1_raw;
            const double of2 = norm_mode ? o.fidelity2_raw / a2sq : o.fidelity2_raw;
            const double dc = o.concurrence - c;
            const double df1 = of1 - (norm_mode ? f1n : f1r);
            const double df2 = of2 - (norm_mode ? f2n : f2r);
            row.insert(row.end(), {o.concurrence, of1, of2, dc, df1, df2});
            track(sum.max_dC, dc);
            track(sum.max_dF1, df1);
            track(sum.max_dF2, df2);
            track(sum.max_purity_dev, o.purity - 0.5 * (1.0 + c * c));
            track(sum.max_leakage, o.leakage);
            if (orc2) {
                const OracleSample o2 = orc2->sample(t);
                for (double d : {o2.concurrence - o.concurrence,
                                 o2.fidelity1_raw - o.fidelity1_raw,
                                 o2.fidelity2_raw - o.fidelity2_raw,
                                 o2.purity - o.purity}) {
                    track(*sum.drift, d);
                }
            }
        }
        out.rows.push_back(std::move(row));
    }
    sum.rows = out.rows.size();
    return out;
}

ProbeSeries run_single(const Scenario &s, const RunOptions &opts) {
    const SinglePairSpec &sp = s.single;
    const SingleDephasingModel model = sp.model();
    model.validate();
    const bool oracle = s.oracle.enabled || opts.force_oracle;
    const bool norm_mode = s.fidelity_mode == FidelityMode::Normalized;

    ProbeSeries out;
    out.name = s.name;
    out.kind = ScenarioKind::Single;
    out.header = {"t",         "F_norm",  "F_raw",     "I",
                  "neg_log_F", "d_norm2", "echo_resid"};
    if (oracle) {
        for (const char *h : {"F_oracle", "I_oracle", "dF", "dI"}) {
            out.header.emplace_back(h);
        }
    }
    std::optional<SingleModelOracle> orc;
    std::optional<SingleModelOracle> orc2;
    if (oracle) {
        orc.emplace(sp.delta, sp.g, sp.a_e, sp.a_g, sp.oscillator, s.oracle.n1,
                    kCalibrated.x_scale, s.oracle.tolerance);
        if (opts.drift_check) {
            orc2.emplace(sp.delta, sp.g, sp.a_e, sp.a_g, sp.oscillator,
                         2 * s.oracle.n1, kCalibrated.x_scale,
                         s.oracle.tolerance);
        }
    }
    const double c2 = std::norm(model.c);

    SeriesSummary &sum = out.summary;
    sum.oracle = oracle;
    if (orc2) {
        sum.drift = 0.0;
    }
    for (double t : s.time.points()) {
        const double fr = single_fidelity(model, t, FidelityMode::Raw);
        const double fn = fr / c2;
        const double ic = qubit_oscillator_i_concurrence(model, t);
        const double nl = -std::log(fn);
        const double d2 = packet_offset(sp.g, t).norm2();
        const double er = std::abs(nl - d2);
        std::vector<double> row{t, fn, fr, ic, nl, d2, er};
        track(sum.max_echo_resid, er);
        if (orc) {
            const SingleOracleSample o = orc->sample(t);
            const double ofr = std::norm(o.coherence);
            const double of = norm_mode ? ofr / c2 : ofr;
            const double oi = std::sqrt(std::max(0.0, 2.0 * (1.0 - o.purity)));
            const double df = of - (norm_mode ? fn : fr);
            const double di = oi - ic;
            row.insert(row.end(), {of, oi, df, di});
            track(sum.max_dF1, df);
            track(sum.max_dI, di);
            track(sum.max_leakage, o.leakage);
            if (orc2) {
                const SingleOracleSample o2 = orc2->sample(t);
                track(*sum.drift, std::abs(o2.coherence - o.coherence));
                track(*sum.drift, o2.purity - o.purity);
            }
        }
        out.rows.push_back(std::move(row));
    }
    sum.rows = out.rows.size();
    return out;
}

int exit_code_for(const std::exception_ptr &ep, std::string &message) {
    try {
        std::rethrow_exception(ep);
    } catch (const TruncationError &e) {
        message = std::string(e.what()) + " (suggested n1 = " +
                  std::to_string(e.suggested_n1()) +
                  ", n2 = " + std::to_string(e.suggested_n2()) + ")";
        return kExitTruncation;
    } catch (const CalibrationError &e) {
        message = e.what();
        return kExitCalibration;
    } catch (const std::exception &e) {
        message = e.what();
        return kExitValidation;
    }
}

} // namespace

ProbeSeries run_scenario(const Scenario &s, const RunOptions &opts) {
    return s.kind == ScenarioKind::TwoPair ? run_two_pair(s, opts)
                                           : run_single(s, opts);
}

void write_csv(const ProbeSeries &series, std::ostream &os) {
    for (std::size_t i = 0; i < series.header.size(); ++i) {
        os << (i ? "," : "") << series.header[i];
    }
    os << '\n';
    for (const auto &row : series.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_double(row[i]);
        }
        os << '\n';
    }
}

void emit(const ProbeSeries &series, const std::filesystem::path &file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error(file.string() + ": cannot open for writing");
    }
    write_csv(series, out);
    out.flush();
    if (!out) {
        throw std::runtime_error(file.string() + ": write failed");
    }
}

ExpectationCheck check_expectation(const Scenario &s,
                                   const ProbeSeries &series) {
    ExpectationCheck c;
    std::ostringstream os;
    const double m = series.summary.max_match_resid;
    if (s.expect.separable && !(m < kSeparableBound)) {
        c.ok = false;
        os << "max match residual " << format_double(m) << " not below 1e-10; ";
    }
    if (s.expect.mismatch_threshold && !(m > *s.expect.mismatch_threshold)) {
        c.ok = false;
        os << "max match residual " << format_double(m)
           << " does not exceed threshold "
           << format_double(*s.expect.mismatch_threshold) << "; ";
    }
    c.detail = os.str();
    return c;
}

std::vector<WignerSnapshot> run_wigner(const Scenario &s) {
    if (s.kind != ScenarioKind::Single || !s.wigner) {
        throw ValidationError("wigner", "scenario has no wigner block");
    }
    const SingleDephasingModel model = s.single.model();
    std::vector<WignerSnapshot> out;
    for (double t : s.wigner->times) {
        out.push_back(wigner_snapshot(model, t, s.wigner->grid, s.wigner->scale));
    }
    return out;
}

std::string wigner_file_name(const Scenario &s, std::size_t k) {
    return s.output + "_wigner_" + std::to_string(k) + ".csv";
}

std::filesystem::path bundled_scenario_dir() { return PHASEPROBE_SCENARIO_DIR; }

std::vector<std::filesystem::path> bundled_scenarios() {
    std::vector<std::filesystem::path> files;
    const auto dir = bundled_scenario_dir();
    if (!std::filesystem::is_directory(dir)) {
        return files;
    }
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

int SuiteResult::exit_code() const {
    int code = kExitOk;
    for (const auto &e : entries) {
        code = std::max(code, e.exit_code);
    }
    return code;
}

SuiteResult run_suite(const std::vector<std::filesystem::path> &files,
                      const RunOptions &opts,
                      const std::filesystem::path &out_dir) {
    auto job = [&](const std::filesystem::path &file) {
        SuiteEntry e;
        e.file = file;
        e.name = file.stem().string();
        try {
            const Scenario s = load_scenario(file);
            e.name = s.name;
            ProbeSeries series = run_scenario(s, opts);
            e.check = check_expectation(s, series);
            if (!out_dir.empty()) {
                emit(series, out_dir / (s.output + ".csv"));
                if (s.wigner) {
                    const auto snaps = run_wigner(s);
                    for (std::size_t k = 0; k < snaps.size(); ++k) {
                        std::ofstream w(out_dir / wigner_file_name(s, k),
                                        std::ios::binary | std::ios::trunc);
                        snaps[k].write_csv(w);
                        if (!w) {
                            throw std::runtime_error(
                                (out_dir / wigner_file_name(s, k)).string() +
                                ": write failed");
                        }
                    }
                }
            }
            e.series = std::move(series);
            if (!e.check.ok) {
                e.exit_code = kExitValidation;
                e.error = e.check.detail;
            }
        } catch (...) {
            e.exit_code = exit_code_for(std::current_exception(), e.error);
        }
        return e;
    };

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
    }
    std::vector<std::future<SuiteEntry>> futures;
    futures.reserve(files.size());
    for (const auto &f : files) {
        futures.push_back(std::async(std::launch::async, job, f));
    }
    SuiteResult res;
    for (auto &f : futures) {
        res.entries.push_back(f.get());
    }
    if (!out_dir.empty()) {
        std::ofstream os(out_dir / "summary.csv", std::ios::binary | std::ios::trunc);
        write_summary_csv(res, os);
    }
    return res;
}

namespace {

std::string cell(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string("-");
}

std::string short_num(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

} // namespace

std::string summary_table(const SuiteResult &result) {
    std::ostringstream os;
    os << std::left << std::setw(34) << "scenario" << std::setw(8) << "rows"
       << std::setw(11) << "cons" << std::setw(11) << "match" << std::setw(11)
       << "dC" << std::setw(11) << "dF1" << std::setw(11) << "dF2"
       << std::setw(11) << "drift" << "status\n";
    for (const auto &e : result.entries) {
        os << std::left << std::setw(34) << e.name;
        if (e.series) {
            const SeriesSummary &s = e.series->summary;
            const bool single = e.series->kind == ScenarioKind::Single;
            os << std::setw(8) << s.rows << std::setw(11)
               << short_num(single ? s.max_echo_resid : s.max_cons_resid)
               << std::setw(11) << (single ? "-" : short_num(s.max_match_resid))
               << std::setw(11) << (s.oracle && !single ? short_num(s.max_dC) : "-")
               << std::setw(11) << (s.oracle ? short_num(s.max_dF1) : "-")
               << std::setw(11) << (s.oracle && !single ? short_num(s.max_dF2) : "-")
               << std::setw(11) << (s.drift ? short_num(*s.drift) : "-");
        } else {
            os << std::setw(85) << "";
        }
        os << (e.exit_code == kExitOk ? "ok" : "FAIL: " + e.error) << '\n';
    }
    return os.str();
}

void write_summary_csv(const SuiteResult &result, std::ostream &os) {
    os << "scenario,kind,rows,max_cons_resid,max_match_resid,max_echo_resid,"
          "max_dC,max_dF1,max_dF2,max_dI,max_purity_dev,drift,status\n";
    for (const auto &e : result.entries) {
        os << e.name << ',';
        if (e.series) {
            const SeriesSummary &s = e.series->summary;
            const bool single = e.series->kind == ScenarioKind::Single;
            auto opt = [&](bool have, double v) {
                return have ? std::optional<double>(v) : std::nullopt;
            };
            os << (single ? "single" : "two_pair") << ',' << s.rows << ','
               << cell(opt(!single, s.max_cons_resid)) << ','
               << cell(opt(!single, s.max_match_resid)) << ','
               << cell(opt(single, s.max_echo_resid)) << ','
               << cell(opt(s.oracle && !single, s.max_dC)) << ','
               << cell(opt(s.oracle, s.max_dF1)) << ','
               << cell(opt(s.oracle && !single, s.max_dF2)) << ','
               << cell(opt(s.oracle && single, s.max_dI)) << ','
               << cell(opt(s.oracle && !single, s.max_purity_dev)) << ','
               << cell(s.drift) << ',';
        } else {
            os << "-,-,-,-,-,-,-,-,-,-,-,";
        }
        os << (e.exit_code == kExitOk ? "ok" : "fail") << '\n';
    }
}

} // namespace phaseprobe
