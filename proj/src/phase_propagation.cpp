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
#include "phaseprobe/phase_propagation.hpp"

#include <cmath>
#include <string>

#include "phaseprobe/errors.hpp"

namespace phaseprobe {

namespace {

constexpr double kReductionThreshold = 1e4;
constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

Block2 rotation_block(const RotationAngle &a) {
    return {a.cos, a.sin, -a.sin, a.cos};
}

Block2 lambda_block(const RotationAngle &a, double omega) {
    const double sn = a.sin / omega;
    const double c1 = a.one_minus_cos / omega;
    return {sn, c1, -c1, sn};
}

// int_{-t}^{0} Lambda(u) du for one block.
Block2 lambda_integral_block(const RotationAngle &a, double omega,
                             double t) {
    const double w2 = omega * omega;
    const double c1 = a.one_minus_cos / w2;
    // omega t - sin(omega t), from the unreduced angle
    const double lin = (omega * t - a.sin) / w2;
    return {-c1, lin, -lin, -c1};
}

// sigma_z eigenvalues (qubit 1, qubit 2) of basis state |idx>.
struct QubitSigns {
    int z1;
    int z2;
};

QubitSigns qubit_signs(int idx) {
    return {idx >= 3 ? 1 : -1, (idx == 2 || idx == 4) ? 1 : -1};
}

} // namespace

void ModelParams::validate() const {
    if (!std::isfinite(delta1) || !std::isfinite(delta2) ||
        !std::isfinite(g1) || !std::isfinite(g2) || !std::isfinite(omega2)) {
        throw ContractViolation("model parameters must be finite");
    }
    if (!(omega2 > 0.0)) {
        throw ContractViolation("omega2 must be positive");
    }
}

RotationAngle rotation_angle(double omega, double t) {
    double theta = omega * t;
    if (std::abs(theta) > kReductionThreshold) {
        const double err = std::fma(omega, t, -theta);
        const long double r =
            std::remainder(static_cast<long double>(theta), kTwoPiL) +
            static_cast<long double>(err);
        theta = static_cast<double>(r);
    }
    RotationAngle a;
    a.theta = theta;
    a.sin = std::sin(theta);
    a.cos = std::cos(theta);
    const double h = std::sin(0.5 * theta);
    a.one_minus_cos = 2.0 * h * h;
    return a;
}

TransitionMatrix transition_matrix(double t, const ModelParams &params) {
    return {rotation_block(rotation_angle(1.0, t)),
            rotation_block(rotation_angle(params.omega2, t))};
}

BlockMatrix4 lambda_matrix(double t, const ModelParams &params) {
    return {lambda_block(rotation_angle(1.0, t), 1.0),
            lambda_block(rotation_angle(params.omega2, t), params.omega2)};
}

PhaseVec4 xi_vector(double alpha, double beta, double t,
                    const ModelParams &params) {
    return lambda_matrix(t, params).apply({alpha, 0.0, beta, 0.0});
}

PhaseVec4 gamma_vector(double alpha, double beta, double t,
                       const ModelParams &params) {
    const BlockMatrix4 m{
        lambda_integral_block(rotation_angle(1.0, t), 1.0, t),
        lambda_integral_block(rotation_angle(params.omega2, t), params.omega2,
                              t)};
    return m.apply({alpha, 0.0, beta, 0.0});
}

PhaseVec4 drift1(double t, const ModelParams &params) {
    const BlockMatrix4 lt = lambda_matrix(-t, params).transposed();
    return lt.apply({0.0, params.g1, 0.0, 0.0});
}

PhaseVec4 drift2(double t, const ModelParams &params) {
    const BlockMatrix4 lt = lambda_matrix(-t, params).transposed();
    return lt.apply({0.0, 0.0, 0.0, params.g2});
}

DisplacementBundle displacement_bundle(double alpha, double beta, double t,
                                       const ModelParams &params) {
    return {xi_vector(alpha, beta, t, params), drift1(t, params),
            drift2(t, params), gamma_vector(alpha, beta, t, params)};
}

GreenImage green_image(ElementIndex ij, const PhaseVec4 &R, double t,
                       const ModelParams &params, const Convention &conv) {
    if (ij.row < 1 || ij.row > 4 || ij.col < 1 || ij.col > 4) {
        throw ContractViolation("element index (" + std::to_string(ij.row) +
                                "," + std::to_string(ij.col) +
                                ") outside 1..4");
    }
    if (ij.row > ij.col) {
        // w_ji(R) = conj(w_ij(-R))
        GreenImage up = green_image({ij.col, ij.row}, -R, t, params, conv);
        return {up.argument, -up.phase, !up.conjugate};
    }

    const QubitSigns zi = qubit_signs(ij.row);
    const QubitSigns zj = qubit_signs(ij.col);
    const TransitionMatrix phi_inv = transition_matrix(-t, params);
    const double half_kappa = 0.5 * conv.kappa;

    // Shift of the argument: kappa xi per oscillator whose qubit differs
    // between bra and ket, signed by (z_i - z_j) / 2.
    const double shift1 = 0.5 * (zi.z1 - zj.z1) * params.g1;
    const double shift2 = 0.5 * (zi.z2 - zj.z2) * params.g2;
    const PhaseVec4 shift = xi_vector(shift1, shift2, t, params) * conv.kappa;

    double phase = -0.5 *
                   (params.delta1 * (zi.z1 - zj.z1) +
                    params.delta2 * (zi.z2 - zj.z2)) *
                   t;

    // Drift phase for oscillators that see the same qubit state on both
    // sides; the packet sits at +z d.
    if (zi.z1 == zj.z1) {
        phase += zi.z1 * half_kappa * drift1(t, params).dot(R);
        // Cross term; zero while the oscillators are uncoupled.
        const PhaseVec4 gam = gamma_vector(0.0, shift2, t, params);
        phase += zi.z1 * conv.kappa * half_kappa * params.g1 * gam.s1;
    }
    if (zi.z2 == zj.z2) {
        phase += zi.z2 * half_kappa * drift2(t, params).dot(R);
        const PhaseVec4 gam = gamma_vector(shift1, 0.0, t, params);
        phase += zi.z2 * conv.kappa * half_kappa * params.g2 * gam.s2;
    }

    return {phi_inv.apply(R - shift), phase, false};
}

} // namespace phaseprobe
