#include "behrend/error.hpp"

namespace behrend {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::NegativeExponent: return "NEGATIVE_EXPONENT";
    case ErrorCode::ExponentOverflow: return "EXPONENT_OVERFLOW";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::KindMismatch: return "KIND_MISMATCH";
    case ErrorCode::MissingValue: return "MISSING_VALUE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::OriginNotOnVariety: return "ORIGIN_NOT_ON_VARIETY";
    case ErrorCode::PointNotOnVariety: return "POINT_NOT_ON_VARIETY";
    case ErrorCode::PointNotOnX: return "POINT_NOT_ON_X";
    case ErrorCode::NotCritical: return "NOT_CRITICAL";
    case ErrorCode::NonIsolated: return "NON_ISOLATED";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::OrderTooLow: return "ORDER_TOO_LOW";
    case ErrorCode::UnitIdeal: return "UNIT_IDEAL";
    case ErrorCode::UnsupportedPresentation: return "UNSUPPORTED_PRESENTATION";
    case ErrorCode::IrrationalPoint: return "IRRATIONAL_POINT";
    case ErrorCode::UnsupportedCycleKind: return "UNSUPPORTED_CYCLE_KIND";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NoPolynomialFit: return "NO_POLYNOMIAL_FIT";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
  }
  return "UNKNOWN";
}

bool is_refusal(ErrorCode code) {
  switch (code) {
    case ErrorCode::OriginNotOnVariety:
    case ErrorCode::PointNotOnVariety:
    case ErrorCode::PointNotOnX:
    case ErrorCode::NotCritical:
    case ErrorCode::NonIsolated:
    case ErrorCode::Unsupported:
    case ErrorCode::OrderTooLow:
    case ErrorCode::UnitIdeal:
    case ErrorCode::UnsupportedPresentation:
    case ErrorCode::IrrationalPoint:
    case ErrorCode::UnsupportedCycleKind:
    case ErrorCode::TooLarge:
    case ErrorCode::NoPolynomialFit:
    case ErrorCode::BoundExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace behrend
