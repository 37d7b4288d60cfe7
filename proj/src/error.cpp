#include "fueterkit/error.hpp"

namespace fueterkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAxiallySymmetric: return "NotAxiallySymmetric";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NotPolyanalytic2: return "NotPolyanalytic2";
    case ErrorCode::StemNotReal: return "StemNotReal";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::DivergentSeries: return "DivergentSeries";
    case ErrorCode::OnSpectrumSphere: return "OnSpectrumSphere";
    case ErrorCode::NotInDisk: return "NotInDisk";
    case ErrorCode::PointOnBoundary: return "PointOnBoundary";
    case ErrorCode::SphereHitsBoundary: return "SphereHitsBoundary";
    case ErrorCode::SingularPencil: return "SingularPencil";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::SpectrumNotEnclosed: return "SpectrumNotEnclosed";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularPencil:
    case ErrorCode::DivergentSeries:
    case ErrorCode::DivisionByZero:
      return false;
    default:
      return true;
  }
}

}  // namespace fueterkit
