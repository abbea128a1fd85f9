// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <cstddef>

#include <immintrin.h>

#include "qlmor/kernels.hpp"

namespace qlmor::kernels::avx2
{

namespace
{

inline double hsum(__m256d v) noexcept
{
    const __m128d lo   = _mm256_castpd256_pd128(v);
    const __m128d hi   = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

} // namespace

void cauchy_weights(std::span<const double> w, std::span<const double> u, std::span<const double> v, cplx shift,
                    MutableComplexSpan out) noexcept
{
    const std::size_t n = w.size();
    const __m256d sr    = _mm256_set1_pd(shift.real());
    const __m256d si    = _mm256_set1_pd(shift.imag());
    const __m256d neg   = _mm256_set1_pd(-0.0);

    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
    {
        const __m256d dr  = _mm256_add_pd(_mm256_loadu_pd(&u[k]), sr);
        const __m256d di  = _mm256_add_pd(_mm256_loadu_pd(&v[k]), si);
        const __m256d mag = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
        const __m256d inv = _mm256_div_pd(_mm256_loadu_pd(&w[k]), mag);
        _mm256_storeu_pd(&out.re[k], _mm256_mul_pd(dr, inv));
        _mm256_storeu_pd(&out.im[k], _mm256_xor_pd(_mm256_mul_pd(di, inv), neg));
    }
    for (; k < n; ++k)
    {
        const double dr  = u[k] + shift.real();
        const double di  = v[k] + shift.imag();
        const double inv = w[k] / (dr * dr + di * di);
        out.re[k]        = dr * inv;
        out.im[k]        = -di * inv;
    }
}

cplx dot(ComplexSpan c, ComplexSpan x) noexcept
{
    const std::size_t n = c.re.size();
    __m256d re          = _mm256_setzero_pd();
    __m256d im          = _mm256_setzero_pd();

    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
    {
        const __m256d cr = _mm256_loadu_pd(&c.re[k]);
        const __m256d ci = _mm256_loadu_pd(&c.im[k]);
        const __m256d xr = _mm256_loadu_pd(&x.re[k]);
        const __m256d xi = _mm256_loadu_pd(&x.im[k]);
        re               = _mm256_fmadd_pd(cr, xr, re);
        re               = _mm256_fnmadd_pd(ci, xi, re);
        im               = _mm256_fmadd_pd(cr, xi, im);
        im               = _mm256_fmadd_pd(ci, xr, im);
    }
    double sre = hsum(re);
    double sim = hsum(im);
    for (; k < n; ++k)
    {
        sre += c.re[k] * x.re[k] - c.im[k] * x.im[k];
        sim += c.re[k] * x.im[k] + c.im[k] * x.re[k];
    }
    return {sre, sim};
}

cplx dot_real(ComplexSpan c, std::span<const double> x) noexcept
{
    const std::size_t n = c.re.size();
    __m256d re          = _mm256_setzero_pd();
    __m256d im          = _mm256_setzero_pd();

    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
    {
        const __m256d xv = _mm256_loadu_pd(&x[k]);
        re               = _mm256_fmadd_pd(_mm256_loadu_pd(&c.re[k]), xv, re);
        im               = _mm256_fmadd_pd(_mm256_loadu_pd(&c.im[k]), xv, im);
    }
    double sre = hsum(re);
    double sim = hsum(im);
    for (; k < n; ++k)
    {
        sre += c.re[k] * x[k];
        sim += c.im[k] * x[k];
    }
    return {sre, sim};
}

} // namespace qlmor::kernels::avx2
