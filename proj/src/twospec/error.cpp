#include "twospec/error.hpp"

namespace twospec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSorted: return "NOT_SORTED";
    case ErrorCode::SharedPoint: return "SHARED_POINT";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::GapOverfull: return "GAP_OVERFULL";
    case ErrorCode::EmptyBand: return "EMPTY_BAND";
    case ErrorCode::NotUnitModulus: return "NOT_UNIT_MODULUS";
    case ErrorCode::DegenerateAngle: return "DEGENERATE_ANGLE";
    case ErrorCode::NotCovered: return "NOT_COVERED";
    case ErrorCode::NegativeCoefficient: return "NEGATIVE_COEFFICIENT";
    case ErrorCode::NotPositive: return "NOT_POSITIVE";
    case ErrorCode::RankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::ZeroNorm: return "ZERO_NORM";
    case ErrorCode::AlphaOutOfDisk: return "ALPHA_OUT_OF_DISK";
    case ErrorCode::ZeroDenominator: return "ZERO_DENOMINATOR";
    case ErrorCode::DimensionTooLarge: return "DIMENSION_TOO_LARGE";
    case ErrorCode::InvalidDimensions: return "INVALID_DIMENSIONS";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace twospec
