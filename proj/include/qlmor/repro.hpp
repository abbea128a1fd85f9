#ifndef QLMOR_REPRO_HPP
#define QLMOR_REPRO_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qlmor::repro
{

/// One printed quantity compared against its recomputed value.
struct Check
{
    std::string name;
    double deviation = 0.0; ///< max absolute entrywise deviation
    double tolerance = 0.0;
    double seconds   = 0.0; ///< wall time of the construction being checked

    [[nodiscard]] bool pass() const { return deviation <= tolerance; }
};

struct Result
{
    std::vector<Check> checks;

    [[nodiscard]] bool pass() const;
};

/// Example 1: exact-sample LF ROM, FQLF ROM from 25000 frequency points on
/// [0, 500] rad/s, and exact and FQLF derivative values at sigma_1, sigma_3.
Result example1();

/// Example 2: TQLF ROM from 10000 impulse samples on [0, 30] s and the TQLF
/// derivative values.
Result example2();

void print(const Result& result, std::ostream& out);

} // namespace qlmor::repro

#endif // QLMOR_REPRO_HPP
