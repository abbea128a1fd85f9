#include "qlmor/error.hpp"

namespace qlmor
{

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularShift: return "SingularShift";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::RepeatedPoles: return "RepeatedPoles";
    case ErrorCode::UnstableModel: return "UnstableModel";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EigFailure: return "EigFailure";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SingularLoewner: return "SingularLoewner";
    case ErrorCode::NotConjugateClosed: return "NotConjugateClosed";
    case ErrorCode::NonPositiveRealPart: return "NonPositiveRealPart";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::PointInsideUnitDisk: return "PointInsideUnitDisk";
    case ErrorCode::MissingDeltaS: return "MissingDeltaS";
    case ErrorCode::NotObservable: return "NotObservable";
    case ErrorCode::NotControllable: return "NotControllable";
    case ErrorCode::DegenerateROM: return "DegenerateROM";
    case ErrorCode::UnstableROM: return "UnstableROM";
    case ErrorCode::SurrogateMisaligned: return "SurrogateMisaligned";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace qlmor
