#include "sdwt/errors.hpp"

namespace sdwt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::NegativeModulus: return "NegativeModulus";
    case ErrorCode::NonPositiveDilation: return "NonPositiveDilation";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::QuadratureDivergence: return "QuadratureDivergence";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::ZeroAdmissibility: return "ZeroAdmissibility";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::SamplingTooSparse: return "SamplingTooSparse";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::BadSlice: return "BadSlice";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<double> value)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      value_(value) {}

Error Error::with_point_index(std::size_t index) const {
  Error copy = *this;
  copy.index_ = index;
  return copy;
}

}  // namespace sdwt
