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

#include <cstddef>

namespace phaseprobe::kernels {

/// One p-row of a two-Gaussian Wigner grid:
///   out[i] = (w_plus exp(-|(x[i], p) - c|^2) + w_minus exp(-|(x[i], p) + c|^2)) / pi
/// with c = (cx, cp).
struct WignerRow {
    double p = 0.0;
    double cx = 0.0;
    double cp = 0.0;
    double w_plus = 0.5;
    double w_minus = 0.5;
};

void wigner_row_scalar(const WignerRow &row, const double *x, double *out,
                       std::size_t n);
void wigner_row_avx2(const WignerRow &row, const double *x, double *out,
                     std::size_t n);

/// sum_i v[i], four-lane association in both variants.
double sum_scalar(const double *v, std::size_t n);
double sum_avx2(const double *v, std::size_t n);

/// exp over a batch, used by the equivalence tests.
void exp_scalar(const double *x, double *out, std::size_t n);
void exp_avx2(const double *x, double *out, std::size_t n);

enum class Isa { Scalar, Avx2 };

/// Best ISA supported by the running CPU (AVX2 and FMA both required).
/// Setting PHASEPROBE_FORCE_SCALAR in the environment pins Scalar.
Isa active_isa();
const char *isa_name(Isa isa);

/// Dispatching entry points.
void wigner_row(const WignerRow &row, const double *x, double *out,
                std::size_t n);
double sum(const double *v, std::size_t n);

} // namespace phaseprobe::kernels
