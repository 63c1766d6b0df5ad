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
#include "doctest.h"

#include <cmath>
#include <string>

#include "phaseprobe/calibration.hpp"
#include "phaseprobe/convention.hpp"
#include "phaseprobe/errors.hpp"

using namespace phaseprobe;

TEST_CASE("calibration selects a single pair") {
    const CalibrationResult res = calibrate();
    CHECK(res.rows.size() == 9);
    REQUIRE(res.passing().size() == 1);
    const Convention sel = res.selected();
    CHECK(sel == kCalibrated);
    CHECK(std::abs(res.minimum_echo - std::exp(-4.0)) < 1e-6);
    for (const auto &row : res.rows) {
        if (row.passed) {
            CHECK(row.oracle_error < 1e-6);
            CHECK(row.analytic_error < 1e-6);
            CHECK(row.coherent_error < 1e-6);
        }
    }

    const std::string ledger = convention_ledger(res);
    CHECK(ledger.find("1.4142135623730951") != std::string::npos);
}

TEST_CASE("calibration fails loudly without a passing pair") {
    CalibrationOptions opts = CalibrationOptions::defaults();
    opts.kappas = {1.0, 2.0};
    const CalibrationResult res = calibrate(opts);
    CHECK(res.passing().empty());
    CHECK_THROWS_AS((void)res.selected(), CalibrationError);
}

TEST_CASE("calibration fails loudly with several passing pairs") {
    CalibrationOptions opts = CalibrationOptions::defaults();
    opts.kappas = {std::sqrt(2.0), std::sqrt(2.0)};
    const CalibrationResult res = calibrate(opts);
    CHECK(res.passing().size() == 2);
    CHECK_THROWS_AS((void)res.selected(), CalibrationError);
}

TEST_CASE("closed-form convention identity") {
    CHECK(kCalibrated.kappa ==
          doctest::Approx(2 * std::sqrt(2.0) * kCalibrated.x_scale));
    CHECK(kCalibrated.canonical_coupling(1.0) ==
          doctest::Approx(std::sqrt(2.0) / 2));
}
