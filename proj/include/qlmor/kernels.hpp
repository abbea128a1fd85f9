#ifndef QLMOR_KERNELS_HPP
#define QLMOR_KERNELS_HPP

#include <complex>
#include <span>
#include <string_view>

///
/// \file kernels.hpp
///
/// Quadrature inner loops. Every kernel has a scalar reference version and,
/// when built for x86-64, an AVX2/FMA version. The dispatch functions at the
/// bottom pick one at run time according to the process-wide KernelMode.
///
/// The scalar kernels accumulate strictly left to right, so results are
/// bit-reproducible. The AVX2 kernels accumulate four lanes and reduce at the
/// end, with fused multiply-adds; they agree with the scalar kernels to
/// rounding but not bitwise.
///
namespace qlmor::kernels
{

using cplx = std::complex<double>;

enum class KernelMode
{
    Auto,   ///< best ISA the CPU supports
    Scalar, ///< always the reference kernels
    Simd,   ///< SIMD kernels; falls back to scalar if unavailable
};

enum class KernelIsa
{
    Scalar,
    Avx2,
};

void set_kernel_mode(KernelMode mode) noexcept;
KernelMode kernel_mode() noexcept;

/// True when the AVX2 kernels were compiled in and the CPU supports AVX2+FMA.
bool avx2_available() noexcept;

/// ISA the dispatchers currently route to.
KernelIsa active_isa() noexcept;

std::string_view isa_name(KernelIsa isa) noexcept;

/// Split-complex view of a contiguous array.
struct ComplexSpan
{
    std::span<const double> re;
    std::span<const double> im;
};

struct MutableComplexSpan
{
    std::span<double> re;
    std::span<double> im;
};

namespace scalar
{
/// out_k = w_k / ((u_k + shift.re) + j (v_k + shift.im))
void cauchy_weights(std::span<const double> w, std::span<const double> u, std::span<const double> v, cplx shift,
                    MutableComplexSpan out) noexcept;
/// sum_k c_k x_k
cplx dot(ComplexSpan c, ComplexSpan x) noexcept;
/// sum_k c_k x_k with real x
cplx dot_real(ComplexSpan c, std::span<const double> x) noexcept;
} // namespace scalar

#if defined(QLMOR_HAVE_AVX2)
namespace avx2
{
void cauchy_weights(std::span<const double> w, std::span<const double> u, std::span<const double> v, cplx shift,
                    MutableComplexSpan out) noexcept;
cplx dot(ComplexSpan c, ComplexSpan x) noexcept;
cplx dot_real(ComplexSpan c, std::span<const double> x) noexcept;
} // namespace avx2
#endif

// Dispatching entry points.
void cauchy_weights(std::span<const double> w, std::span<const double> u, std::span<const double> v, cplx shift,
                    MutableComplexSpan out) noexcept;
cplx dot(ComplexSpan c, ComplexSpan x) noexcept;
cplx dot_real(ComplexSpan c, std::span<const double> x) noexcept;

} // namespace qlmor::kernels

#endif // QLMOR_KERNELS_HPP
