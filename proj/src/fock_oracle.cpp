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
#include "phaseprobe/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "phaseprobe/errors.hpp"
#include "phaseprobe/format.hpp"

namespace phaseprobe {

namespace {

constexpr double kTailBound = 1e-12;
constexpr double kDensityTolerance = 1e-10;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

cplx displacement_of(const PhaseVec2 &r) {
    return cplx(-r.s, r.k) * kInvSqrt2;
}

void guard_dimension(long long dim) {
    if (dim * dim > kMaxDenseEntries) {
        throw ResourceError("dense operator of dimension " +
                            std::to_string(dim) + " exceeds " +
                            std::to_string(kMaxDenseEntries) + " entries");
    }
}

void require_level(int level, int n, const char *what) {
    if (level >= n) {
        throw TruncationError(std::string(what) + ": level " +
                                  std::to_string(level) +
                                  " does not fit a truncation of " +
                                  std::to_string(n),
                              2 * std::max(n, level + 2),
                              2 * std::max(n, level + 2));
    }
}

CVector number_pair(int n, int m, cplx a, cplx b, int dim) {
    require_level(std::max(n, m), dim, "number state");
    CVector v = CVector::Zero(dim);
    v(n) += a;
    v(m) += b;
    const double nrm = v.norm();
    if (!(nrm > 0.0)) {
        throw ContractViolation("number superposition has zero norm");
    }
    return v / nrm;
}

// Real symmetric oscillator block omega (n + 1/2) + c (a + a^dagger).
RMatrix oscillator_block(int n, double omega, double c) {
    RMatrix h = RMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        h(k, k) = omega * (k + 0.5);
        if (k + 1 < n) {
            const double v = c * std::sqrt(static_cast<double>(k + 1));
            h(k, k + 1) = v;
            h(k + 1, k) = v;
        }
    }
    return h;
}

void validate_keep(const std::vector<int> &dims, const std::vector<int> &keep) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= static_cast<int>(dims.size())) {
            throw ContractViolation("partial_trace: subsystem index " +
                                    std::to_string(keep[i]) + " out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw ContractViolation(
                "partial_trace: kept subsystems must be ascending and distinct");
        }
    }
}

// For every full index, its position within the kept and traced factors.
struct Split {
    std::vector<Eigen::Index> kept;
    std::vector<Eigen::Index> traced;
    Eigen::Index dim_kept = 1;
    Eigen::Index dim_traced = 1;
};

Split split_indices(const std::vector<int> &dims, const std::vector<int> &keep) {
    validate_keep(dims, keep);
    Split s;
    Eigen::Index total = 1;
    std::vector<bool> is_kept(dims.size(), false);
    for (int k : keep) {
        is_kept[k] = true;
    }
    for (std::size_t f = 0; f < dims.size(); ++f) {
        if (dims[f] < 1) {
            throw ContractViolation("partial_trace: factor dimension < 1");
        }
        total *= dims[f];
        (is_kept[f] ? s.dim_kept : s.dim_traced) *= dims[f];
    }
    s.kept.resize(total);
    s.traced.resize(total);
    std::vector<int> digit(dims.size(), 0);
    for (Eigen::Index idx = 0; idx < total; ++idx) {
        Eigen::Index k = 0;
        Eigen::Index r = 0;
        for (std::size_t f = 0; f < dims.size(); ++f) {
            if (is_kept[f]) {
                k = k * dims[f] + digit[f];
            } else {
                r = r * dims[f] + digit[f];
            }
        }
        s.kept[idx] = k;
        s.traced[idx] = r;
        for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
            if (++digit[f] < dims[f]) {
                break;
            }
            digit[f] = 0;
        }
    }
    return s;
}

} // namespace

void FockConfig::validate() const {
    if (n1 < 2 || n2 < 2) {
        throw ContractViolation("Fock truncation must keep at least 2 levels");
    }
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw ContractViolation("truncation tolerance must be positive");
    }
}

RMatrix annihilation_matrix(int n) {
    RMatrix a = RMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

CMatrix displacement_matrix(int n, cplx eta) {
    const CMatrix a = annihilation_matrix(n).cast<cplx>();
    const CMatrix gen = eta * a.adjoint() - std::conj(eta) * a;
    CMatrix herm = cplx(0.0, 1.0) * gen;
    herm = 0.5 * (herm + herm.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    const CVector ph = (-cplx(0.0, 1.0) * es.eigenvalues().cast<cplx>())
                           .array()
                           .exp()
                           .matrix();
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

CVector coherent_amplitudes(int n, double x, double p) {
    const cplx alpha = cplx(x, p) * kInvSqrt2;
    CVector v(n);
    cplx c = std::exp(-0.5 * std::norm(alpha));
    long double mass = 0.0L;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            c *= alpha / std::sqrt(static_cast<double>(k));
        }
        v(k) = c;
        mass += std::norm(c);
    }
    const double tail = static_cast<double>(1.0L - mass);
    if (tail > kTailBound) {
        throw TruncationError("coherent state at (" + format_double(x) +
                                  ", " + format_double(p) +
                                  ") leaves norm " + format_double(tail) +
                                  " beyond level " + std::to_string(n - 1),
                              2 * n, 2 * n);
    }
    return v * std::polar(1.0, 0.5 * x * p);
}

CVector single_mode_amplitudes(const SingleModeSpec &spec, int n) {
    return std::visit(
        overloaded{[&](const CoherentMode &c) {
                       return coherent_amplitudes(n, c.x, c.p);
                   },
                   [&](const NumberSuperposition &s) {
                       if (s.n == s.m) {
                           throw ContractViolation(
                               "number superposition needs n != m");
                       }
                       return number_pair(s.n, s.m, s.alpha, s.beta, n);
                   }},
        spec);
}

CMatrix oscillator_amplitudes(const StateSpec &spec, int n1, int n2) {
    // make_state validates and normalizes the weights
    const StateSpec norm = make_state(spec).spec();
    return std::visit(
        overloaded{
            [&](const GaussianParams &g) -> CMatrix {
                return coherent_amplitudes(n1, g.x_o1, g.p_o1) *
                       coherent_amplitudes(n2, g.x_o2, g.p_o2).transpose();
            },
            [&](const EntangledCoherentParams &e) -> CMatrix {
                const CMatrix a =
                    coherent_amplitudes(n1, e.alpha1.real(), e.alpha1.imag()) *
                    coherent_amplitudes(n2, e.beta2.real(), e.beta2.imag())
                        .transpose();
                const CMatrix b =
                    coherent_amplitudes(n1, e.beta1.real(), e.beta1.imag()) *
                    coherent_amplitudes(n2, e.alpha2.real(), e.alpha2.imag())
                        .transpose();
                return e.c1 * a + e.c2 * b;
            },
            [&](const SeparableNumberParams &s) -> CMatrix {
                if (s.mode != NumberFormMode::Exact) {
                    throw UnsupportedStateError(
                        "literal separable-number form is not a state");
                }
                return number_pair(s.n1, s.m1, s.alpha1, s.beta1, n1) *
                       number_pair(s.n2, s.m2, s.alpha2, s.beta2, n2)
                           .transpose();
            },
            [&](const EntangledNumberParams &e) -> CMatrix {
                if (e.mode != NumberFormMode::Exact) {
                    throw UnsupportedStateError(
                        "literal entangled-number form is not a state");
                }
                require_level(std::max(e.n1, e.m1), n1, "oscillator 1");
                require_level(std::max(e.n2, e.m2), n2, "oscillator 2");
                CMatrix m = CMatrix::Zero(n1, n2);
                m(e.n1, e.m2) += e.p1;
                m(e.m1, e.n2) += e.p2;
                return m;
            }},
        norm);
}

CompositeOperator build_hamiltonian(const ModelParams &params,
                                    const FockConfig &cfg, double x_scale) {
    params.validate();
    cfg.validate();
    const long long dim = 4LL * cfg.n1 * cfg.n2;
    guard_dimension(dim);

    CompositeOperator h;
    h.dims = {2, 2, cfg.n1, cfg.n2};
    h.matrix = CMatrix::Zero(dim, dim);
    auto index = [&](int q1, int q2, int n, int m) {
        return ((static_cast<Eigen::Index>(q1) * 2 + q2) * cfg.n1 + n) *
                   cfg.n2 +
               m;
    };
    for (int q1 = 0; q1 < 2; ++q1) {
        for (int q2 = 0; q2 < 2; ++q2) {
            const double z1 = 2.0 * q1 - 1.0;
            const double z2 = 2.0 * q2 - 1.0;
            const double c1 = z1 * params.g1 * x_scale;
            const double c2 = z2 * params.g2 * x_scale;
            for (int n = 0; n < cfg.n1; ++n) {
                for (int m = 0; m < cfg.n2; ++m) {
                    const auto i = index(q1, q2, n, m);
                    h.matrix(i, i) = 0.5 * params.delta1 * z1 +
                                     0.5 * params.delta2 * z2 + (n + 0.5) +
                                     params.omega2 * (m + 0.5);
                    if (n + 1 < cfg.n1) {
                        const auto j = index(q1, q2, n + 1, m);
                        const double v = c1 * std::sqrt(n + 1.0);
                        h.matrix(i, j) = v;
                        h.matrix(j, i) = v;
                    }
                    if (m + 1 < cfg.n2) {
                        const auto j = index(q1, q2, n, m + 1);
                        const double v = c2 * std::sqrt(m + 1.0);
                        h.matrix(i, j) = v;
                        h.matrix(j, i) = v;
                    }
                }
            }
        }
    }
    return h;
}

CompositeOperator build_single_hamiltonian(double delta, double g, int n,
                                           double x_scale) {
    if (n < 2) {
        throw ContractViolation("Fock truncation must keep at least 2 levels");
    }
    const long long dim = 2LL * n;
    guard_dimension(dim);
    CompositeOperator h;
    h.dims = {2, n};
    h.matrix = CMatrix::Zero(dim, dim);
    for (int q = 0; q < 2; ++q) {
        const double z = 2.0 * q - 1.0;
        h.matrix.block(q * n, q * n, n, n) =
            (oscillator_block(n, 1.0, z * g * x_scale) +
             0.5 * delta * z * RMatrix::Identity(n, n))
                .cast<cplx>();
    }
    return h;
}

Matrix4c spin_flip_operator() {
    Matrix4c y = Matrix4c::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

SpectralPropagator::SpectralPropagator(const CompositeOperator &h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix);
    if (es.info() != Eigen::Success) {
        throw ContractViolation("Hamiltonian diagonalization failed");
    }
    vectors_ = es.eigenvectors();
    energies_ = es.eigenvalues();
}

CVector SpectralPropagator::evolve(const CVector &psi0, double t) const {
    if (!std::isfinite(t) || !psi0.allFinite()) {
        throw ContractViolation("evolve: non-finite input");
    }
    if (psi0.size() != vectors_.rows()) {
        throw ContractViolation("evolve: state dimension mismatch");
    }
    CVector c = vectors_.adjoint() * psi0;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        c(k) *= std::polar(1.0, -energies_(k) * t);
    }
    return vectors_ * c;
}

CVector evolve(const CompositeOperator &h, const CVector &psi0, double t) {
    return SpectralPropagator(h).evolve(psi0, t);
}

// --- sector form ---------------------------------------------------------------

CVector SectorState::dense() const {
    const Eigen::Index n1 = amp[0].rows();
    const Eigen::Index n2 = amp[0].cols();
    CVector v(4 * n1 * n2);
    for (int q = 0; q < 4; ++q) {
        for (Eigen::Index n = 0; n < n1; ++n) {
            for (Eigen::Index m = 0; m < n2; ++m) {
                v((q * n1 + n) * n2 + m) = amp[q](n, m);
            }
        }
    }
    return v;
}

double SectorState::norm2() const {
    double s = 0.0;
    for (const auto &m : amp) {
        s += m.squaredNorm();
    }
    return s;
}

SectorState product_state(const std::array<cplx, 4> &qubits,
                          const CMatrix &oscillators) {
    SectorState s;
    for (int q = 0; q < 4; ++q) {
        s.amp[q] = qubits[q] * oscillators;
    }
    return s;
}

SectorPropagator::SectorPropagator(const ModelParams &params,
                                   const FockConfig &cfg, double x_scale)
    : params_(params) {
    params.validate();
    cfg.validate();
    for (int side = 0; side < 2; ++side) {
        const double z = side == 0 ? -1.0 : 1.0;
        Eigen::SelfAdjointEigenSolver<RMatrix> e1(
            oscillator_block(cfg.n1, 1.0, z * params.g1 * x_scale));
        Eigen::SelfAdjointEigenSolver<RMatrix> e2(
            oscillator_block(cfg.n2, params.omega2, z * params.g2 * x_scale));
        osc1_[side] = {e1.eigenvectors(), e1.eigenvalues()};
        osc2_[side] = {e2.eigenvectors(), e2.eigenvalues()};
    }
}

namespace {

CMatrix real_left(const RMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows(), b.cols());
    out.real() = a * b.real();
    out.imag() = a * b.imag();
    return out;
}

CMatrix real_right(const CMatrix &a, const RMatrix &b) {
    CMatrix out(a.rows(), b.cols());
    out.real() = a.real() * b;
    out.imag() = a.imag() * b;
    return out;
}

CVector phases(const Eigen::VectorXd &energies, double t) {
    CVector ph(energies.size());
    for (Eigen::Index k = 0; k < energies.size(); ++k) {
        ph(k) = std::polar(1.0, -energies(k) * t);
    }
    return ph;
}

} // namespace

SectorPropagator::Rotated
SectorPropagator::rotate(const SectorState &psi0) const {
    Rotated r;
    for (int q = 0; q < 4; ++q) {
        const Oscillator &o1 = osc1_[q >= 2 ? 1 : 0];
        const Oscillator &o2 = osc2_[q & 1];
        r.amp[q] = real_right(real_left(o1.vectors.transpose(), psi0.amp[q]),
                              o2.vectors);
    }
    return r;
}

SectorState SectorPropagator::evolve(const SectorState &psi0, double t) const {
    return evolve(rotate(psi0), t);
}

SectorState SectorPropagator::evolve(const Rotated &psi0, double t) const {
    if (!std::isfinite(t)) {
        throw ContractViolation("evolve: non-finite time");
    }
    const std::array<CVector, 2> p1{phases(osc1_[0].energies, t),
                                    phases(osc1_[1].energies, t)};
    const std::array<CVector, 2> p2{phases(osc2_[0].energies, t),
                                    phases(osc2_[1].energies, t)};
    SectorState out;
    for (int q = 0; q < 4; ++q) {
        const int s1 = q >= 2 ? 1 : 0;
        const int s2 = q & 1;
        const double z1 = 2.0 * s1 - 1.0;
        const double z2 = 2.0 * s2 - 1.0;
        const cplx ph = std::polar(
            1.0, -0.5 * (params_.delta1 * z1 + params_.delta2 * z2) * t);
        const CMatrix m =
            ph * (p1[s1].asDiagonal() * psi0.amp[q] * p2[s2].asDiagonal());
        out.amp[q] = real_right(real_left(osc1_[s1].vectors, m),
                                osc2_[s2].vectors.transpose());
    }
    return out;
}

Matrix4c two_qubit_density(const SectorState &psi) {
    Matrix4c rho;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            rho(a, b) =
                (psi.amp[a].array() * psi.amp[b].conjugate().array()).sum();
        }
    }
    return rho;
}

double top_level_population(const SectorState &psi) {
    double p1 = 0.0;
    double p2 = 0.0;
    for (const auto &m : psi.amp) {
        const Eigen::Index n1 = m.rows();
        const Eigen::Index n2 = m.cols();
        p1 += m.bottomRows(std::min<Eigen::Index>(2, n1)).squaredNorm();
        p2 += m.rightCols(std::min<Eigen::Index>(2, n2)).squaredNorm();
    }
    return std::max(p1, p2);
}

// --- measures --------------------------------------------------------------

double wootters_concurrence(const Matrix4c &rho) {
    if (!rho.allFinite()) {
        throw ContractViolation("density matrix has non-finite entries");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
        throw ContractViolation("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > kDensityTolerance) {
        throw ContractViolation("density matrix trace differs from 1");
    }
    const Matrix4c herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(herm);
    if (es.eigenvalues().minCoeff() < -kDensityTolerance) {
        throw ContractViolation("density matrix is not positive semi-definite");
    }
    const Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
    const Matrix4c sq = es.eigenvectors() *
                        ev.cwiseSqrt().cast<cplx>().asDiagonal() *
                        es.eigenvectors().adjoint();
    // lambda_i are the singular values of sqrt(rho) sqrt(rho~), with
    // sqrt(rho~) = Y sqrt(rho)* Y; no square root of small eigenvalues.
    const Matrix4c y = spin_flip_operator();
    const Matrix4c m = sq * (y * sq.conjugate() * y);
    const Eigen::JacobiSVD<Matrix4c> svd(m);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        lam[i] = svd.singularValues()(i);
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

CMatrix partial_trace(const CVector &psi, const std::vector<int> &dims,
                      const std::vector<int> &keep) {
    const Split s = split_indices(dims, keep);
    if (static_cast<Eigen::Index>(s.kept.size()) != psi.size()) {
        throw ContractViolation("partial_trace: state size does not match dims");
    }
    CMatrix m = CMatrix::Zero(s.dim_kept, s.dim_traced);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        m(s.kept[i], s.traced[i]) = psi(i);
    }
    return m * m.adjoint();
}

CMatrix partial_trace(const CMatrix &rho, const std::vector<int> &dims,
                      const std::vector<int> &keep) {
    const Split s = split_indices(dims, keep);
    if (static_cast<Eigen::Index>(s.kept.size()) != rho.rows() ||
        rho.rows() != rho.cols()) {
        throw ContractViolation("partial_trace: matrix size does not match dims");
    }
    // full index for each (kept, traced) pair
    std::vector<Eigen::Index> full(s.kept.size());
    for (std::size_t i = 0; i < s.kept.size(); ++i) {
        full[s.kept[i] * s.dim_traced + s.traced[i]] =
            static_cast<Eigen::Index>(i);
    }
    CMatrix out = CMatrix::Zero(s.dim_kept, s.dim_kept);
    for (Eigen::Index a = 0; a < s.dim_kept; ++a) {
        for (Eigen::Index b = 0; b < s.dim_kept; ++b) {
            cplx acc = 0.0;
            for (Eigen::Index r = 0; r < s.dim_traced; ++r) {
                acc += rho(full[a * s.dim_traced + r], full[b * s.dim_traced + r]);
            }
            out(a, b) = acc;
        }
    }
    return out;
}

cplx charfn_sample(const CMatrix &rho_osc, int n1, int n2, const PhaseVec4 &R) {
    if (rho_osc.rows() != static_cast<Eigen::Index>(n1) * n2 ||
        rho_osc.cols() != rho_osc.rows()) {
        throw ContractViolation("charfn_sample: matrix size does not match");
    }
    const CMatrix d1 = displacement_matrix(n1, displacement_of(R.block1()));
    const CMatrix d2 = displacement_matrix(n2, displacement_of(R.block2()));
    cplx acc = 0.0;
    for (int n = 0; n < n1; ++n) {
        for (int m = 0; m < n2; ++m) {
            const Eigen::Index a = static_cast<Eigen::Index>(n) * n2 + m;
            for (int np = 0; np < n1; ++np) {
                const cplx k1 = d1(np, n);
                for (int mp = 0; mp < n2; ++mp) {
                    const Eigen::Index b = static_cast<Eigen::Index>(np) * n2 + mp;
                    acc += rho_osc(a, b) * k1 * d2(mp, m);
                }
            }
        }
    }
    return acc;
}

cplx charfn_sample_pure(const CMatrix &amplitudes, const PhaseVec4 &R) {
    const int n1 = static_cast<int>(amplitudes.rows());
    const int n2 = static_cast<int>(amplitudes.cols());
    const CMatrix d1 = displacement_matrix(n1, displacement_of(R.block1()));
    const CMatrix d2 = displacement_matrix(n2, displacement_of(R.block2()));
    const CMatrix moved = d1 * amplitudes * d2.transpose();
    return (amplitudes.conjugate().array() * moved.array()).sum();
}

// --- protocol oracles --------------------------------------------------------

ProtocolOracle::ProtocolOracle(const ModelParams &params,
                               const StateSpec &state,
                               const QubitPreparation &prep,
                               const FockConfig &cfg, double x_scale)
    : cfg_(cfg), prop_(params, cfg, x_scale) {
    prep.validate();
    const CMatrix osc = oscillator_amplitudes(state, cfg.n1, cfg.n2);
    osc0_ = prop_.rotate(product_state({1.0, 1.0, 1.0, 1.0}, osc));
    bell_ = {0.0, kInvSqrt2, kInvSqrt2, 0.0};
    fid_ = prep.amplitudes();
}

OracleSample ProtocolOracle::sample(double t) const {
    // Both copies share the oscillator state; only the qubit weights differ.
    const SectorState osc = prop_.evolve(osc0_, t);
    SectorState bell;
    SectorState fid;
    for (int q = 0; q < 4; ++q) {
        bell.amp[q] = bell_[q] * osc.amp[q];
        fid.amp[q] = fid_[q] * osc.amp[q];
    }

    OracleSample s;
    s.t = t;
    s.leakage = std::max(top_level_population(bell), top_level_population(fid));
    if (s.leakage > cfg_.tolerance) {
        throw TruncationError("oracle truncation leakage " +
                                  format_double(s.leakage) + " at t = " +
                                  format_double(t) + " exceeds tolerance",
                              2 * cfg_.n1, 2 * cfg_.n2);
    }

    Matrix4c rb = two_qubit_density(bell);
    rb = 0.5 * (rb + rb.adjoint()).eval();
    s.rho_bell = rb;
    s.concurrence = wootters_concurrence(rb);
    s.purity = (rb * rb).trace().real();
    s.i_concurrence = std::sqrt(std::max(0.0, 2.0 * (1.0 - s.purity)));

    const Matrix4c rf = two_qubit_density(fid);
    s.coherence1 = rf(2, 0) + rf(3, 1);
    s.coherence2 = rf(1, 0) + rf(3, 2);
    s.fidelity1_raw = std::norm(s.coherence1);
    s.fidelity2_raw = std::norm(s.coherence2);
    return s;
}

SingleModelOracle::SingleModelOracle(double delta, double g, cplx a_e,
                                     cplx a_g, const SingleModeSpec &oscillator,
                                     int n, double x_scale, double tolerance)
    : n_(n), tolerance_(tolerance),
      prop_(build_single_hamiltonian(delta, g, n, x_scale)) {
    if (std::abs(std::norm(a_e) + std::norm(a_g) - 1.0) > 1e-10) {
        throw ContractViolation("qubit amplitudes must be normalized");
    }
    const CVector osc = single_mode_amplitudes(oscillator, n);
    psi0_.resize(2 * n);
    psi0_.head(n) = a_g * osc;
    psi0_.tail(n) = a_e * osc;
}

SingleOracleSample SingleModelOracle::sample(double t) const {
    const CVector psi = prop_.evolve(psi0_, t);
    const CVector g = psi.head(n_);
    const CVector e = psi.tail(n_);

    SingleOracleSample s;
    s.t = t;
    s.leakage = g.tail(2).squaredNorm() + e.tail(2).squaredNorm();
    if (s.leakage > tolerance_) {
        throw TruncationError("oracle truncation leakage " +
                                  format_double(s.leakage) + " at t = " +
                                  format_double(t) + " exceeds tolerance",
                              2 * n_, 2 * n_);
    }
    s.coherence = g.dot(e);
    const double pe = e.squaredNorm();
    const double pg = g.squaredNorm();
    s.population_e = pe;
    s.purity = pe * pe + pg * pg + 2.0 * std::norm(s.coherence);

    const CMatrix a = annihilation_matrix(n_).cast<cplx>();
    const CMatrix x = (a + a.adjoint()) * kInvSqrt2;
    const CMatrix p = (a - a.adjoint()) * cplx(0.0, -kInvSqrt2);
    auto centroid = [&](const CVector &v, double w) -> PhaseVec2 {
        if (!(w > 0.0)) {
            return {};
        }
        return {v.dot(x * v).real() / w, v.dot(p * v).real() / w};
    };
    s.centroid_e = centroid(e, pe);
    s.centroid_g = centroid(g, pg);
    return s;
}

} // namespace phaseprobe
