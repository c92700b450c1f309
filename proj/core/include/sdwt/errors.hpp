#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdwt {

enum class ErrorCode {
  ConstraintViolation,
  NegativeModulus,
  NonPositiveDilation,
  InvalidGrid,
  InvalidArgument,
  QuadratureDivergence,
  CutoffTooSmall,
  ZeroAdmissibility,
  GridTooCoarse,
  SamplingTooSparse,
  TruncationOverflow,
  ZeroB,
  DegenerateDenominator,
  NotUnimodular,
  BadSlice,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every module reports failures through this one exception type; `value`
// carries the offending quantity when there is a natural one (constraint
// residual, error estimate, boundary ratio, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

  // Index of the parameter point that failed inside a batch, if any.
  std::optional<std::size_t> point_index() const noexcept { return index_; }
  Error with_point_index(std::size_t index) const;

 private:
  ErrorCode code_;
  std::optional<double> value_;
  std::optional<std::size_t> index_;
};

}  // namespace sdwt
