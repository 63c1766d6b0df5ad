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
#include <vector>

#include <Eigen/Dense>

#include "phaseprobe/convention.hpp"
#include "phaseprobe/initial_states.hpp"
#include "phaseprobe/phase_space.hpp"
#include "phaseprobe/qubits.hpp"

namespace phaseprobe {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using Matrix4c = Eigen::Matrix4cd;

struct FockConfig {
    int n1 = 40;
    int n2 = 40;
    double tolerance = 1e-10;

    /// Throws ContractViolation unless n1, n2 >= 2 and tolerance > 0.
    void validate() const;
};

/// Dense operators refuse to grow beyond this many entries.
inline constexpr long long kMaxDenseEntries = 1'000'000;

// --- single-oscillator building blocks -------------------------------------

/// Truncated annihilation operator, a|n> = sqrt(n)|n-1>.
RMatrix annihilation_matrix(int n);

/// exp(eta a^dagger - conj(eta) a) of the truncated generator, through the
/// eigen-decomposition of the Hermitian matrix i(eta a^dagger - conj(eta) a).
CMatrix displacement_matrix(int n, cplx eta);

/// Amplitudes of the coherent state centred at (x, p) in canonical
/// quadratures, including the phase exp(i x p / 2). Throws TruncationError
/// when more than 1e-12 of the norm lies beyond level n - 1.
CVector coherent_amplitudes(int n, double x, double p);

/// Pure single-oscillator state in the first n levels.
CVector single_mode_amplitudes(const SingleModeSpec &spec, int n);

/// Pure two-oscillator state as an n1 x n2 amplitude matrix M(n, m).
/// Throws UnsupportedStateError for the paper-literal number forms, which
/// are not states.
CMatrix oscillator_amplitudes(const StateSpec &spec, int n1, int n2);

// --- composite operators ---------------------------------------------------

/// Dense operator over a tensor product; dims lists the factor dimensions,
/// slowest first. The two-pair basis is |q1> (x) |q2> (x) |n> (x) |m> with
/// qubit index 0 = ground, 1 = excited.
struct CompositeOperator {
    CMatrix matrix;
    std::vector<int> dims;

    Eigen::Index dimension() const { return matrix.rows(); }
};

/// Two qubit-oscillator pairs with oscillator frequencies 1 and Omega and
/// x = x_scale (a + a^dagger). Throws ResourceError above kMaxDenseEntries.
CompositeOperator build_hamiltonian(const ModelParams &params,
                                    const FockConfig &cfg, double x_scale);

/// Single pair: delta/2 sigma_z + n + 1/2 + g sigma_z x_scale (a + a^dagger),
/// basis |q> (x) |n>.
CompositeOperator build_single_hamiltonian(double delta, double g, int n,
                                           double x_scale);

/// The spin-flip operator sigma_y (x) sigma_y in the two-qubit basis.
Matrix4c spin_flip_operator();

/// e^{-iHt} from one diagonalization, reused across times.
class SpectralPropagator {
  public:
    explicit SpectralPropagator(const CompositeOperator &h);

    CVector evolve(const CVector &psi0, double t) const;
    const Eigen::VectorXd &energies() const { return energies_; }

  private:
    CMatrix vectors_;
    Eigen::VectorXd energies_;
};

/// One-shot convenience; diagonalizes on every call.
CVector evolve(const CompositeOperator &h, const CVector &psi0, double t);

// --- two-pair states in sector form ------------------------------------------

/// Two-pair pure state as four n1 x n2 amplitude matrices, one per qubit
/// basis state |1> = g1g2, |2> = g1e2, |3> = e1g2, |4> = e1e2.
struct SectorState {
    std::array<CMatrix, 4> amp;

    /// Dense vector in the CompositeOperator basis.
    CVector dense() const;
    double norm2() const;
};

SectorState product_state(const std::array<cplx, 4> &qubits,
                          const CMatrix &oscillators);

/// The Hamiltonian commutes with both sigma_z, so each qubit sector evolves
/// under two independent oscillator Hamiltonians. Each is diagonalized once.
class SectorPropagator {
  public:
    SectorPropagator(const ModelParams &params, const FockConfig &cfg,
                     double x_scale);

    /// Sector amplitudes expressed in the oscillator eigenbases.
    struct Rotated {
        std::array<CMatrix, 4> amp;
    };
    Rotated rotate(const SectorState &psi0) const;

    SectorState evolve(const SectorState &psi0, double t) const;
    /// Same result without the change of basis of psi0.
    SectorState evolve(const Rotated &psi0, double t) const;

  private:
    struct Oscillator {
        RMatrix vectors;
        Eigen::VectorXd energies;
    };
    ModelParams params_;
    std::array<Oscillator, 2> osc1_; // z1 = -1, +1
    std::array<Oscillator, 2> osc2_;
};

/// Reduced two-qubit density matrix.
Matrix4c two_qubit_density(const SectorState &psi);

/// Largest population found in the top two levels of either oscillator.
double top_level_population(const SectorState &psi);

// --- measures ------------------------------------------------------------

/// max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
/// eigenvalues of rho (sigma_y sigma_y) rho* (sigma_y sigma_y). Throws
/// ContractViolation unless rho is Hermitian, positive semi-definite and of
/// unit trace, all to 1e-10.
double wootters_concurrence(const Matrix4c &rho);

/// Reduced density matrix over the factors listed in `keep` (ascending,
/// distinct, within range). An empty `keep` yields the 1 x 1 trace.
CMatrix partial_trace(const CVector &psi, const std::vector<int> &dims,
                      const std::vector<int> &keep);
CMatrix partial_trace(const CMatrix &rho, const std::vector<int> &dims,
                      const std::vector<int> &keep);

/// tr[rho D1(eta1) D2(eta2)] = tr[rho exp(i(k1 x1 + s1 p1 + k2 x2 + s2 p2))]
/// for a two-oscillator density matrix in the |n> (x) |m> basis.
cplx charfn_sample(const CMatrix &rho_osc, int n1, int n2, const PhaseVec4 &R);
/// The same for a pure amplitude matrix M(n, m).
cplx charfn_sample_pure(const CMatrix &amplitudes, const PhaseVec4 &R);

// --- protocol oracles ------------------------------------------------------

struct OracleSample {
    double t = 0.0;
    Matrix4c rho_bell;  ///< two-qubit state of the Bell copy
    double concurrence = 0.0;
    double purity = 0.0;
    double i_concurrence = 0.0; ///< sqrt(2 (1 - purity))
    cplx coherence1;    ///< <e1| rho_q1 |g1> of the unprojected copy
    cplx coherence2;
    double fidelity1_raw = 0.0; ///< |coherence1|^2
    double fidelity2_raw = 0.0;
    double leakage = 0.0;
};

/// Brute-force evolution of both protocol copies from the same oscillator
/// state: the Bell copy starts in Psi+ and the fidelity copy in `prep`.
class ProtocolOracle {
  public:
    ProtocolOracle(const ModelParams &params, const StateSpec &state,
                   const QubitPreparation &prep, const FockConfig &cfg,
                   double x_scale = kCalibrated.x_scale);

    /// Throws TruncationError when the top-level population exceeds the
    /// configured tolerance.
    OracleSample sample(double t) const;

    const FockConfig &config() const { return cfg_; }

  private:
    FockConfig cfg_;
    SectorPropagator prop_;
    SectorPropagator::Rotated osc0_; // oscillator state in every sector
    std::array<cplx, 4> bell_;
    std::array<cplx, 4> fid_;
};

struct SingleOracleSample {
    double t = 0.0;
    cplx coherence;     ///< <e| rho_q |g>
    double purity = 0.0;
    double population_e = 0.0;
    PhaseVec2 centroid_e; ///< canonical <x>, <p> conditioned on |e>
    PhaseVec2 centroid_g;
    double leakage = 0.0;
};

/// Single qubit-oscillator pair (qubit amplitudes a_e |e> + a_g |g>) by
/// dense diagonalization of the full Hamiltonian.
class SingleModelOracle {
  public:
    SingleModelOracle(double delta, double g, cplx a_e, cplx a_g,
                      const SingleModeSpec &oscillator, int n, double x_scale,
                      double tolerance = 1e-10);

    SingleOracleSample sample(double t) const;

  private:
    int n_;
    double tolerance_;
    SpectralPropagator prop_;
    CVector psi0_;
};

} // namespace phaseprobe
