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
#include "phaseprobe/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "phaseprobe/errors.hpp"

namespace phaseprobe {

namespace {

constexpr int kTableMax = 170;

struct FactorialTables {
    std::array<double, kTableMax + 1> value{};
    std::array<double, kTableMax + 1> log{};

    FactorialTables() {
        value[0] = 1.0;
        log[0] = 0.0;
        long double acc = 1.0L;
        long double lacc = 0.0L;
        for (int n = 1; n <= kTableMax; ++n) {
            acc *= n;
            lacc += std::log(static_cast<long double>(n));
            value[n] = static_cast<double>(acc);
            log[n] = static_cast<double>(lacc);
        }
    }
};

const FactorialTables &tables() {
    static const FactorialTables t;
    return t;
}

} // namespace

double factorial(int n) {
    if (n < 0) {
        throw ContractViolation("factorial of negative integer");
    }
    if (n > kTableMax) {
        return std::numeric_limits<double>::infinity();
    }
    return tables().value[n];
}

double log_factorial(int n) {
    if (n < 0) {
        throw ContractViolation("factorial of negative integer");
    }
    if (n > kTableMax) {
        return std::lgamma(static_cast<double>(n) + 1.0);
    }
    return tables().log[n];
}

double laguerre(int n, int k, double x) {
    if (n < 0) {
        throw ContractViolation("laguerre: degree must be non-negative, got " +
                                std::to_string(n));
    }
    if (n + k < 0) {
        throw ContractViolation("laguerre: n + k must be non-negative");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 1.0 + k - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) /
                            (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::complex<double> displaced_number_element(int n, int m,
                                              std::complex<double> zeta) {
    if (n < 0 || m < 0) {
        throw ContractViolation("displaced_number_element: negative level");
    }
    if (n < m) {
        return std::conj(displaced_number_element(m, n, -zeta));
    }
    const double r2 = std::norm(zeta);
    const int d = n - m;
    if (r2 == 0.0) {
        return d == 0 ? 1.0 : 0.0;
    }
    const double lag = laguerre(m, d, r2);
    const double r = std::sqrt(r2);
    const double log_mag = 0.5 * (log_factorial(m) - log_factorial(n)) +
                           d * std::log(r) - 0.5 * r2;
    const std::complex<double> unit = zeta / r;
    std::complex<double> phase = 1.0;
    for (int i = 0; i < d; ++i) {
        phase *= unit;
    }
    return std::exp(log_mag) * lag * phase;
}

std::complex<double> coherent_displacement_element(std::complex<double> beta,
                                                   std::complex<double> eta,
                                                   std::complex<double> alpha) {
    const std::complex<double> shifted = alpha + eta;
    const std::complex<double> expo =
        0.5 * (eta * std::conj(alpha) - std::conj(eta) * alpha) -
        0.5 * std::norm(beta) - 0.5 * std::norm(shifted) +
        std::conj(beta) * shifted;
    return std::exp(expo);
}

} // namespace phaseprobe
