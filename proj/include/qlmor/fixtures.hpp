#ifndef QLMOR_FIXTURES_HPP
#define QLMOR_FIXTURES_HPP

#include "qlmor/interpolation.hpp"
#include "qlmor/lti.hpp"

namespace qlmor::fixtures
{

/// Sixth-order, 3-input, 2-output continuous benchmark system.
StateSpaceModel example1_model();

/// Fourth-order two-sided interpolation data used with example1_model.
TangentialData example1_data();

/// Printed fourth-order ROM (4 decimals).
struct PrintedRom
{
    RMatrix A;
    RMatrix B;
    RMatrix C;
};

PrintedRom example1_lf_rom();
PrintedRom example1_fqlf_rom();
PrintedRom example2_tqlf_rom();

/// Printed values of C (s I - A)^{-2} B b at sigma_1 and sigma_3, which is
/// the negated derivative of G along b.
struct PrintedDerivatives
{
    CVector at_sigma1;
    CVector at_sigma3;
};

PrintedDerivatives example1_exact_derivatives();
PrintedDerivatives example1_fqlf_derivatives();
PrintedDerivatives example2_tqlf_derivatives();

/// Grid of the frequency-response data: [0, 500] rad/s, 25000 points.
inline constexpr double kExample1OmegaMax = 500.0;
inline constexpr int kExample1Points      = 25000;
/// Grid of the impulse-response data: [0, 30] s, 10000 points.
inline constexpr double kExample2TimeMax = 30.0;
inline constexpr int kExample2Points     = 10000;

} // namespace qlmor::fixtures

#endif // QLMOR_FIXTURES_HPP
