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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "phaseprobe/phase_space.hpp"

namespace testing {

inline constexpr double kPi = 3.14159265358979323846;

/// Composite Simpson rule on [a, b] with n (even) intervals.
template <class F> auto simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    auto acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        acc = acc + f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return acc * (h / 3.0);
}

inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(20260915);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline phaseprobe::PhaseVec4 random_point(double radius) {
    return {uniform(-radius, radius), uniform(-radius, radius),
            uniform(-radius, radius), uniform(-radius, radius)};
}

inline double max_abs(const phaseprobe::BlockMatrix4 &a,
                      const phaseprobe::BlockMatrix4 &b) {
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

inline std::complex<double> vacuum2(const phaseprobe::PhaseVec4 &R) {
    return std::exp(-R.norm2() / 4.0);
}

} // namespace testing
