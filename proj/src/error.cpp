#include "lps/error.hpp"

namespace lps {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotAPreorder: return "NotAPreorder";
    case ErrorCode::MissingPoint: return "MissingPoint";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::NotRelated: return "NotRelated";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NeighborhoodConditionFailed: return "NeighborhoodConditionFailed";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::ChartNotPartialOrder: return "ChartNotPartialOrder";
    case ErrorCode::IncompatibleCharts: return "IncompatibleCharts";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotAStreamMap: return "NotAStreamMap";
    case ErrorCode::IllTypedDiagram: return "IllTypedDiagram";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

}  // namespace lps
