#include "freqlmi/error.hpp"

namespace freqlmi {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::OriginOnCurve: return "OriginOnCurve";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace freqlmi
