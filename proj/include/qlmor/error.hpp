#ifndef QLMOR_ERROR_HPP
#define QLMOR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlmor
{

enum class ErrorCode
{
    InvalidArgument,
    // lti_core
    SingularShift,
    NegativeTime,
    RepeatedPoles,
    UnstableModel,
    SingularMatrix,
    EigFailure,
    // interpolation
    CoincidentPoints,
    SingularLoewner,
    NotConjugateClosed,
    // sampling
    NonPositiveRealPart,
    EmptyGrid,
    PointInsideUnitDisk,
    MissingDeltaS,
    // pork
    NotObservable,
    NotControllable,
    // irka
    DegenerateROM,
    UnstableROM,
    SurrogateMisaligned,
    // cli_io
    ParseError,
    DimensionMismatch,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` lets
/// callers (the CLI in particular) classify the failure without string
/// matching.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

} // namespace qlmor

#endif // QLMOR_ERROR_HPP
