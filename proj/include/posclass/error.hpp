#pragma once

#include <source_location>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posclass {

enum class ErrorCode {
  // affine permutations
  DuplicateResidue,
  BadWindowSum,
  PeriodMismatch,
  EqualResidues,
  NotZeroGrassmannian,
  Overflow,
  // partitions and the truncated ring
  RectangleOverflow,
  SizeMismatch,
  RingMismatch,
  NotSymmetric,
  // L-S tree
  ZeroGrassmannianLeaf,
  NotBounded,
  // oracles
  FullSubset,
  BudgetExceeded,
  // bridges
  NotComparable,
  NormalizationFailed,
  NotToric,
  TooManyRows,
  // text input
  ParseError,
  InvalidArgument,
  // a checked internal identity failed
  InvariantViolation,
};

std::string_view error_name(ErrorCode code);

/// Library error. Carries a machine-readable code and the throw site.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::source_location where = std::source_location::current());

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace posclass
