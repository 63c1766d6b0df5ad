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
#include <cmath>

namespace phaseprobe {

/// Fourier phase-space point (k, s) of a single oscillator.
struct PhaseVec2 {
    double k = 0.0;
    double s = 0.0;

    constexpr PhaseVec2 operator+(const PhaseVec2 &o) const { return {k + o.k, s + o.s}; }
    constexpr PhaseVec2 operator-(const PhaseVec2 &o) const { return {k - o.k, s - o.s}; }
    constexpr PhaseVec2 operator-() const { return {-k, -s}; }
    constexpr PhaseVec2 operator*(double a) const { return {a * k, a * s}; }
    constexpr double dot(const PhaseVec2 &o) const { return k * o.k + s * o.s; }
    constexpr double norm2() const { return k * k + s * s; }
    double norm() const { return std::hypot(k, s); }
};

/// Fourier phase-space point R = (k1, s1, k2, s2) of the two oscillators.
struct PhaseVec4 {
    double k1 = 0.0;
    double s1 = 0.0;
    double k2 = 0.0;
    double s2 = 0.0;

    constexpr PhaseVec4() = default;
    constexpr PhaseVec4(double k1_, double s1_, double k2_, double s2_)
        : k1(k1_), s1(s1_), k2(k2_), s2(s2_) {}
    constexpr PhaseVec4(const PhaseVec2 &r1, const PhaseVec2 &r2)
        : k1(r1.k), s1(r1.s), k2(r2.k), s2(r2.s) {}

    constexpr PhaseVec2 block1() const { return {k1, s1}; }
    constexpr PhaseVec2 block2() const { return {k2, s2}; }

    constexpr PhaseVec4 operator+(const PhaseVec4 &o) const {
        return {k1 + o.k1, s1 + o.s1, k2 + o.k2, s2 + o.s2};
    }
    constexpr PhaseVec4 operator-(const PhaseVec4 &o) const {
        return {k1 - o.k1, s1 - o.s1, k2 - o.k2, s2 - o.s2};
    }
    constexpr PhaseVec4 operator-() const { return {-k1, -s1, -k2, -s2}; }
    constexpr PhaseVec4 operator*(double a) const {
        return {a * k1, a * s1, a * k2, a * s2};
    }
    constexpr double dot(const PhaseVec4 &o) const {
        return k1 * o.k1 + s1 * o.s1 + k2 * o.k2 + s2 * o.s2;
    }
    constexpr double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    constexpr std::array<double, 4> array() const { return {k1, s1, k2, s2}; }
};

constexpr PhaseVec4 operator*(double a, const PhaseVec4 &v) { return v * a; }
constexpr PhaseVec2 operator*(double a, const PhaseVec2 &v) { return v * a; }

/// Real 2x2 block, row major.
struct Block2 {
    double a00 = 0.0, a01 = 0.0;
    double a10 = 0.0, a11 = 0.0;

    static constexpr Block2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    constexpr PhaseVec2 apply(const PhaseVec2 &v) const {
        return {a00 * v.k + a01 * v.s, a10 * v.k + a11 * v.s};
    }
    constexpr Block2 operator*(const Block2 &o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }
    constexpr Block2 transposed() const { return {a00, a10, a01, a11}; }
    constexpr double det() const { return a00 * a11 - a01 * a10; }
};

/// Block-diagonal 4x4 matrix acting on (r1, r2) independently. Every
/// phase-space matrix of the uncoupled oscillators has this shape.
struct BlockMatrix4 {
    Block2 b1;
    Block2 b2;

    static constexpr BlockMatrix4 identity() {
        return {Block2::identity(), Block2::identity()};
    }

    constexpr PhaseVec4 apply(const PhaseVec4 &v) const {
        return {b1.apply(v.block1()), b2.apply(v.block2())};
    }
    constexpr BlockMatrix4 operator*(const BlockMatrix4 &o) const {
        return {b1 * o.b1, b2 * o.b2};
    }
    constexpr BlockMatrix4 transposed() const {
        return {b1.transposed(), b2.transposed()};
    }

    /// Dense row-major view, zeros off the blocks.
    constexpr std::array<std::array<double, 4>, 4> dense() const {
        return {{{b1.a00, b1.a01, 0.0, 0.0},
                 {b1.a10, b1.a11, 0.0, 0.0},
                 {0.0, 0.0, b2.a00, b2.a01},
                 {0.0, 0.0, b2.a10, b2.a11}}};
    }
};

/// Dimensionless model parameters; the first oscillator frequency is the
/// unit of time.
struct ModelParams {
    double delta1 = 0.0; ///< qubit 1 splitting over oscillator 1 frequency
    double delta2 = 0.0;
    double omega2 = 1.0; ///< oscillator frequency ratio, must be > 0
    double g1 = 0.0;     ///< dephasing coupling of pair 1
    double g2 = 0.0;

    double delta12() const { return delta1 - delta2; }

    /// Throws ContractViolation on non-finite entries or omega2 <= 0.
    void validate() const;

    bool operator==(const ModelParams &) const = default;
};

} // namespace phaseprobe
