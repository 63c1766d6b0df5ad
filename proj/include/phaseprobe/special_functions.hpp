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

namespace phaseprobe {

/// n! from a table for n <= 170; +inf above (use log_factorial there).
double factorial(int n);

/// log(n!), exact table values up to 170 and lgamma beyond.
double log_factorial(int n);

/// Associated Laguerre polynomial L_n^{(k)}(x) by the three-term recurrence.
/// Requires n >= 0; k may be negative as long as n + k >= 0.
double laguerre(int n, int k, double x);

/// <n| D(zeta) |m> with D(zeta) = exp(zeta a^dagger - conj(zeta) a).
std::complex<double> displaced_number_element(int n, int m,
                                              std::complex<double> zeta);

/// <beta| D(eta) |alpha> between standard coherent states.
std::complex<double> coherent_displacement_element(std::complex<double> beta,
                                                   std::complex<double> eta,
                                                   std::complex<double> alpha);

} // namespace phaseprobe
