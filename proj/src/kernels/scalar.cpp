#include <cstddef>

#include "qlmor/kernels.hpp"

namespace qlmor::kernels::scalar
{

void cauchy_weights(std::span<const double> w, std::span<const double> u, std::span<const double> v, cplx shift,
                    MutableComplexSpan out) noexcept
{
    const double sr     = shift.real();
    const double si     = shift.imag();
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k)
    {
        const double dr  = u[k] + sr;
        const double di  = v[k] + si;
        const double inv = w[k] / (dr * dr + di * di);
        out.re[k]        = dr * inv;
        out.im[k]        = -di * inv;
    }
}

cplx dot(ComplexSpan c, ComplexSpan x) noexcept
{
    double re           = 0.0;
    double im           = 0.0;
    const std::size_t n = c.re.size();
    for (std::size_t k = 0; k < n; ++k)
    {
        re += c.re[k] * x.re[k] - c.im[k] * x.im[k];
        im += c.re[k] * x.im[k] + c.im[k] * x.re[k];
    }
    return {re, im};
}

cplx dot_real(ComplexSpan c, std::span<const double> x) noexcept
{
    double re           = 0.0;
    double im           = 0.0;
    const std::size_t n = c.re.size();
    for (std::size_t k = 0; k < n; ++k)
    {
        re += c.re[k] * x[k];
        im += c.im[k] * x[k];
    }
    return {re, im};
}

} // namespace qlmor::kernels::scalar
