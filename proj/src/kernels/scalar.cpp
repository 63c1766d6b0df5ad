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
#include <cmath>
#include <numbers>

#include "phaseprobe/kernels.hpp"

namespace phaseprobe::kernels {

void wigner_row_scalar(const WignerRow &row, const double *x, double *out,
                       std::size_t n) {
    const double dpm = row.p - row.cp;
    const double dpp = row.p + row.cp;
    const double qm = dpm * dpm;
    const double qp = dpp * dpp;
    for (std::size_t i = 0; i < n; ++i) {
        const double xm = x[i] - row.cx;
        const double xp = x[i] + row.cx;
        out[i] = (row.w_plus * std::exp(-(xm * xm + qm)) +
                  row.w_minus * std::exp(-(xp * xp + qp))) *
                 std::numbers::inv_pi;
    }
}

double sum_scalar(const double *v, std::size_t n) {
    // four lanes, same association as the vector path
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (int l = 0; l < 4; ++l) {
            acc[l] += v[i + l];
        }
    }
    double s = (acc[0] + acc[2]) + (acc[1] + acc[3]);
    for (; i < n; ++i) {
        s += v[i];
    }
    return s;
}

void exp_scalar(const double *x, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(x[i]);
    }
}

} // namespace phaseprobe::kernels
