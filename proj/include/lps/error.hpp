#pragma once

#include <stdexcept>
#include <string>

namespace lps {

enum class ErrorCode {
  InvalidArgument,
  UnknownPoint,
  DuplicatePoint,
  CapacityExceeded,
  CarrierMismatch,
  SpaceMismatch,
  NotAPreorder,
  MissingPoint,
  NotMinimal,
  NotOpen,
  InvalidSubset,
  InvalidPartition,
  NotContinuous,
  NotRelated,
  NotConvex,
  NeighborhoodConditionFailed,
  NotACover,
  ChartNotPartialOrder,
  IncompatibleCharts,
  NotAntisymmetric,
  NotAStreamMap,
  IllTypedDiagram,
  ParseError,
  UnknownFormat,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a stable status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lps
