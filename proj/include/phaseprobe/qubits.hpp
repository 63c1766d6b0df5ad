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

#include <array>
#include <complex>

namespace phaseprobe {

/// Product preparation (a1|e1> + b1|g1>)(a2|e2> + b2|g2>).
///
/// Basis order |1> = g1g2, |2> = g1e2, |3> = e1g2, |4> = e1e2, so the
/// amplitude vector is psi = (b1 b2, b1 a2, a1 b2, a1 a2) and
/// c_ij = psi_i conj(psi_j).
struct QubitPreparation {
    std::complex<double> a1{0.70710678118654752440, 0.0};
    std::complex<double> b1{0.70710678118654752440, 0.0};
    std::complex<double> a2{0.70710678118654752440, 0.0};
    std::complex<double> b2{0.70710678118654752440, 0.0};

    /// a_i = b_i = 1/sqrt(2).
    static QubitPreparation maximal() { return {}; }

    std::array<std::complex<double>, 4> amplitudes() const {
        return {b1 * b2, b1 * a2, a1 * b2, a1 * a2};
    }

    /// c_ij with 1-based indices.
    std::complex<double> coefficient(int i, int j) const {
        const auto psi = amplitudes();
        return psi[i - 1] * std::conj(psi[j - 1]);
    }

    /// Throws ContractViolation unless |a_i|^2 + |b_i|^2 = 1 (1e-10).
    void validate() const;

    /// Coherence normalizations A1 = |c13 + c24|, A2 = |c12 + c34|.
    double coherence_norm1() const {
        return std::abs(coefficient(1, 3) + coefficient(2, 4));
    }
    double coherence_norm2() const {
        return std::abs(coefficient(1, 2) + coefficient(3, 4));
    }
};

} // namespace phaseprobe
