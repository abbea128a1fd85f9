#include <atomic>

#include "qlmor/kernels.hpp"

namespace qlmor::kernels
{

namespace
{

std::atomic<KernelMode> g_mode{KernelMode::Auto};

bool detect_avx2() noexcept
{
#if defined(QLMOR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

} // namespace

void set_kernel_mode(KernelMode mode) noexcept { g_mode.store(mode, std::memory_order_relaxed); }

KernelMode kernel_mode() noexcept { return g_mode.load(std::memory_order_relaxed); }

bool avx2_available() noexcept
{
    static const bool available = detect_avx2();
    return available;
}

KernelIsa active_isa() noexcept
{
    if (kernel_mode() == KernelMode::Scalar)
        return KernelIsa::Scalar;
    return avx2_available() ? KernelIsa::Avx2 : KernelIsa::Scalar;
}

std::string_view isa_name(KernelIsa isa) noexcept
{
    switch (isa)
    {
    case KernelIsa::Avx2:
        return "avx2";
    case KernelIsa::Scalar:
        break;
    }
    return "scalar";
}

void cauchy_weights(std::span<const double> w, std::span<const double> u, std::span<const double> v, cplx shift,
                    MutableComplexSpan out) noexcept
{
#if defined(QLMOR_HAVE_AVX2)
    if (active_isa() == KernelIsa::Avx2)
        return avx2::cauchy_weights(w, u, v, shift, out);
#endif
    scalar::cauchy_weights(w, u, v, shift, out);
}

cplx dot(ComplexSpan c, ComplexSpan x) noexcept
{
#if defined(QLMOR_HAVE_AVX2)
    if (active_isa() == KernelIsa::Avx2)
        return avx2::dot(c, x);
#endif
    return scalar::dot(c, x);
}

cplx dot_real(ComplexSpan c, std::span<const double> x) noexcept
{
#if defined(QLMOR_HAVE_AVX2)
    if (active_isa() == KernelIsa::Avx2)
        return avx2::dot_real(c, x);
#endif
    return scalar::dot_real(c, x);
}

} // namespace qlmor::kernels
