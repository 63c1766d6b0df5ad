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

#include <complex>

#include "phaseprobe/convention.hpp"
#include "phaseprobe/phase_space.hpp"

namespace phaseprobe {

using TransitionMatrix = BlockMatrix4;

/// sin, cos and 1 - cos of omega * t. Angles beyond 1e4 are reduced modulo
/// 2 pi in extended precision, including the rounding error of the product.
struct RotationAngle {
    double theta = 0.0; ///< reduced angle
    double sin = 0.0;
    double cos = 1.0;
    double one_minus_cos = 0.0;
};

RotationAngle rotation_angle(double omega, double t);

/// Block rotation Phi(t) = exp(A t): angle t on oscillator 1, Omega t on
/// oscillator 2, [[cos, sin], [-sin, cos]] per block.
TransitionMatrix transition_matrix(double t, const ModelParams &params);

/// Lambda(t) = int_0^t Phi(t - t') dt', evaluated per block in closed form.
BlockMatrix4 lambda_matrix(double t, const ModelParams &params);

/// xi_{alpha,beta}(t) = Lambda(t) (alpha, 0, beta, 0).
PhaseVec4 xi_vector(double alpha, double beta, double t,
                    const ModelParams &params);

/// Gamma(t) = int_0^t Lambda(t' - t) (alpha, 0, beta, 0) dt'.
PhaseVec4 gamma_vector(double alpha, double beta, double t,
                       const ModelParams &params);

/// Drift covector d_1(t) = g1 Lambda^T(-t) e_{s1}.
PhaseVec4 drift1(double t, const ModelParams &params);
/// Drift covector d_2(t) = g2 Lambda^T(-t) e_{s2}.
PhaseVec4 drift2(double t, const ModelParams &params);

struct DisplacementBundle {
    PhaseVec4 xi;
    PhaseVec4 d1;
    PhaseVec4 d2;
    PhaseVec4 gamma;
};

DisplacementBundle displacement_bundle(double alpha, double beta, double t,
                                       const ModelParams &params);

/// Two-qubit computational-basis element |i><j|, 1-based: |1> = g1g2,
/// |2> = g1e2, |3> = e1g2, |4> = e1e2.
struct ElementIndex {
    int row = 1;
    int col = 1;
};

/// Where and how the initial characteristic function is sampled to obtain
/// w_ij(R, t) / c_ij:  value = w0(argument), conjugated if `conjugate`,
/// times exp(i phase).
struct GreenImage {
    PhaseVec4 argument;
    double phase = 0.0;
    bool conjugate = false;
};

/// Green-function image of element ij at phase point R and time t (t_o = 0).
/// Throws ContractViolation for indices outside 1..4.
GreenImage green_image(ElementIndex ij, const PhaseVec4 &R, double t,
                       const ModelParams &params,
                       const Convention &conv = kCalibrated);

/// w_ij(R, t) / c_ij for an initial characteristic function `w0`
/// (any callable PhaseVec4 -> std::complex<double>).
template <class CharFn>
std::complex<double> propagate_element(ElementIndex ij, const CharFn &w0,
                                       const PhaseVec4 &R, double t,
                                       const ModelParams &params,
                                       const Convention &conv = kCalibrated) {
    const GreenImage img = green_image(ij, R, t, params, conv);
    std::complex<double> v = w0(img.argument);
    if (img.conjugate) {
        v = std::conj(v);
    }
    return v * std::polar(1.0, img.phase);
}

} // namespace phaseprobe
