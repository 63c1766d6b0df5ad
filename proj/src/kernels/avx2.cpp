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

// Compiled with -mavx2 -mfma. Only reached through the dispatcher.

#include <immintrin.h>

#include <cmath>
#include <numbers>

#include "phaseprobe/kernels.hpp"

namespace phaseprobe::kernels {

namespace {

// Cephes-style exp: x = n ln2 + r, |r| <= ln2/2, Pade form for e^r.
// 2^n is applied in two halves so n = 1024 and subnormal results work.
inline __m256d exp_pd(__m256d x) {
    const __m256d hi = _mm256_set1_pd(709.782712893384);
    const __m256d lo = _mm256_set1_pd(-745.1332191019412);
    const __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    const __m256d over = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                      _MM_FROUND_TO_NEAREST_INT |
                                          _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, c1, x);
    r = _mm256_fnmadd_pd(n, c2, r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);

    __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(2.00000000000000000009e0));

    __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_fmadd_pd(e, _mm256_set1_pd(2.0), _mm256_set1_pd(1.0));

    // 2^n = 2^h 2^(n - h) through the exponent field
    const __m128i ni = _mm256_cvtpd_epi32(n);
    const __m128i h = _mm_srai_epi32(ni, 1);
    const __m128i rest = _mm_sub_epi32(ni, h);
    const __m256i bias = _mm256_set1_epi64x(1023);
    const __m256i b1 = _mm256_slli_epi64(
        _mm256_add_epi64(_mm256_cvtepi32_epi64(h), bias), 52);
    const __m256i b2 = _mm256_slli_epi64(
        _mm256_add_epi64(_mm256_cvtepi32_epi64(rest), bias), 52);
    e = _mm256_mul_pd(_mm256_mul_pd(e, _mm256_castsi256_pd(b1)),
                      _mm256_castsi256_pd(b2));

    e = _mm256_blendv_pd(e, _mm256_set1_pd(HUGE_VAL), over);
    return _mm256_andnot_pd(under, e);
}

} // namespace

void wigner_row_avx2(const WignerRow &row, const double *x, double *out,
                     std::size_t n) {
    const double dpm = row.p - row.cp;
    const double dpp = row.p + row.cp;
    const __m256d qm = _mm256_set1_pd(dpm * dpm);
    const __m256d qp = _mm256_set1_pd(dpp * dpp);
    const __m256d cx = _mm256_set1_pd(row.cx);
    const __m256d wp = _mm256_set1_pd(row.w_plus * std::numbers::inv_pi);
    const __m256d wm = _mm256_set1_pd(row.w_minus * std::numbers::inv_pi);
    const __m256d zero = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d xm = _mm256_sub_pd(xv, cx);
        const __m256d xp = _mm256_add_pd(xv, cx);
        const __m256d am = _mm256_sub_pd(zero, _mm256_fmadd_pd(xm, xm, qm));
        const __m256d ap = _mm256_sub_pd(zero, _mm256_fmadd_pd(xp, xp, qp));
        const __m256d v =
            _mm256_fmadd_pd(wp, exp_pd(am), _mm256_mul_pd(wm, exp_pd(ap)));
        _mm256_storeu_pd(out + i, v);
    }
    if (i < n) {
        wigner_row_scalar(row, x + i, out + i, n - i);
    }
}

double sum_avx2(const double *v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi); // (a0 + a2, a1 + a3)
    double s = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
    for (; i < n; ++i) {
        s += v[i];
    }
    return s;
}

void exp_avx2(const double *x, double *out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, exp_pd(_mm256_loadu_pd(x + i)));
    }
    if (i < n) {
        exp_scalar(x + i, out + i, n - i);
    }
}

} // namespace phaseprobe::kernels
