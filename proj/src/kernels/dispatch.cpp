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
#include <cstdlib>

#include "phaseprobe/kernels.hpp"

namespace phaseprobe::kernels {

namespace {

Isa detect() {
    if (std::getenv("PHASEPROBE_FORCE_SCALAR") != nullptr) {
        return Isa::Scalar;
    }
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return Isa::Avx2;
    }
#endif
    return Isa::Scalar;
}

} // namespace

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

const char *isa_name(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void wigner_row(const WignerRow &row, const double *x, double *out,
                std::size_t n) {
    if (active_isa() == Isa::Avx2) {
        wigner_row_avx2(row, x, out, n);
    } else {
        wigner_row_scalar(row, x, out, n);
    }
}

double sum(const double *v, std::size_t n) {
    return active_isa() == Isa::Avx2 ? sum_avx2(v, n) : sum_scalar(v, n);
}

} // namespace phaseprobe::kernels
