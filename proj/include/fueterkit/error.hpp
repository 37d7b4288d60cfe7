#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fueterkit {

/// Named failure conditions raised by the library.
enum class ErrorCode {
  DivisionByZero,
  NotAxiallySymmetric,
  BadDegree,
  NotPolyanalytic2,
  StemNotReal,
  OutsideDomain,
  DivergentSeries,
  OnSpectrumSphere,
  NotInDisk,
  PointOnBoundary,
  SphereHitsBoundary,
  SingularPencil,
  NonCommuting,
  SpectrumNotEnclosed,
  NormTooLarge,
  NonPositiveRadius,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by malformed or out-of-contract input (as opposed
/// to a numerical breakdown during an otherwise valid computation).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fueterkit
